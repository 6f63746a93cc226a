"""Contrast index construction, class I/II/III tiers, and degree comparison.

Class I: words in adjacent (or manually annotated) thesaurus categories.
Class II: otherwise, words one in each paragraph of a prime contrasting
paragraph pair (the paragraphs holding the two members of a seed opposite).
Class III: otherwise, words across any contrasting category pair.
Within a tier, corpus co-occurrence (PMI) orders the degree of contrast.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .seeds import SeedPair
from .thesaurus import Thesaurus


class Tier(enum.Enum):
    I = 3
    II = 2
    III = 1
    NONE = 0

    def __lt__(self, other: "Tier") -> bool:
        return self.value < other.value


@dataclass(frozen=True)
class AdjacencyMode:
    """How category adjacency is decided: off, consecutive numbers, or manual set."""

    kind: str  # "off" | "heuristic" | "manual"
    pairs: frozenset[frozenset[int]] = frozenset()

    def __post_init__(self) -> None:
        if self.kind not in ("off", "heuristic", "manual"):
            raise ValueError(f"unknown adjacency mode {self.kind!r}")

    def adjacent(self, a: int, b: int) -> bool:
        if self.kind == "heuristic":
            return abs(a - b) == 1
        if self.kind == "manual":
            return frozenset((a, b)) in self.pairs
        return False


ADJACENCY_OFF = AdjacencyMode("off")
ADJACENCY_HEURISTIC = AdjacencyMode("heuristic")


def manual_adjacency(pairs: Iterable[frozenset[int]]) -> AdjacencyMode:
    return AdjacencyMode("manual", frozenset(frozenset(p) for p in pairs))


PrimeKey = frozenset  # frozenset of two (category_number, paragraph_index) pairs


@dataclass
class ContrastIndex:
    # category pair -> provenance tags (affix, external_list, adjacency_*)
    contrasting_categories: dict[frozenset[int], set[str]] = field(default_factory=dict)
    # paragraph-location pair -> inducing seed pairs
    prime_paragraphs: dict[PrimeKey, set[SeedPair]] = field(default_factory=dict)
    # adjacency pairs fixed at build time (used for lexicon generation)
    adjacency_pairs: set[frozenset[int]] = field(default_factory=set)


def _seed_provenance(seed: SeedPair) -> str:
    return "affix" if seed.source.startswith("affix") else seed.source


def build_contrast_index(thesaurus: Thesaurus, seeds: Iterable[SeedPair],
                         adjacency_mode: AdjacencyMode = ADJACENCY_OFF) -> ContrastIndex:
    """Mark contrasting category pairs and prime contrasting paragraphs.

    Seeds whose members are not both in the thesaurus are skipped. A seed
    landing in a single category marks nothing.
    """
    index = ContrastIndex()
    for seed in seeds:
        locs1 = thesaurus.locate(seed.word1)
        locs2 = thesaurus.locate(seed.word2)
        if not locs1 or not locs2:
            continue
        tag = _seed_provenance(seed)
        for l1 in locs1:
            for l2 in locs2:
                if l1.category_number == l2.category_number:
                    continue
                catpair = frozenset((l1.category_number, l2.category_number))
                index.contrasting_categories.setdefault(catpair, set()).add(tag)
                prime = frozenset(((l1.category_number, l1.paragraph_index),
                                   (l2.category_number, l2.paragraph_index)))
                index.prime_paragraphs.setdefault(prime, set()).add(seed)

    if adjacency_mode.kind == "heuristic":
        numbers = set(thesaurus.category_numbers())
        for n in numbers:
            if n + 1 in numbers:
                pair = frozenset((n, n + 1))
                index.adjacency_pairs.add(pair)
                index.contrasting_categories.setdefault(pair, set()).add("adjacency_heuristic")
    elif adjacency_mode.kind == "manual":
        for pair in adjacency_mode.pairs:
            index.adjacency_pairs.add(pair)
            index.contrasting_categories.setdefault(pair, set()).add("adjacency_manual")
    return index


def contrast_class(index: ContrastIndex, thesaurus: Thesaurus, w1: str, w2: str,
                   adjacency_mode: AdjacencyMode = ADJACENCY_OFF) -> Tier:
    """Highest applicable reliability tier for the pair; symmetric in (w1, w2)."""
    locs1 = thesaurus.locate(w1)
    locs2 = thesaurus.locate(w2)
    if not locs1 or not locs2:
        return Tier.NONE

    cats1 = {l.category_number for l in locs1}
    cats2 = {l.category_number for l in locs2}
    for a in cats1:
        for b in cats2:
            if a != b and adjacency_mode.adjacent(a, b):
                return Tier.I

    paras1 = {(l.category_number, l.paragraph_index) for l in locs1}
    paras2 = {(l.category_number, l.paragraph_index) for l in locs2}
    for p1 in paras1:
        for p2 in paras2:
            if p1 != p2 and frozenset((p1, p2)) in index.prime_paragraphs:
                return Tier.II

    for a in cats1:
        for b in cats2:
            if a != b and frozenset((a, b)) in index.contrasting_categories:
                return Tier.III
    return Tier.NONE


@dataclass(frozen=True)
class ContrastJudgment:
    tier: Tier
    pmi: Optional[float]
    pair: tuple[str, str]

    @staticmethod
    def make(tier: Tier, pmi: Optional[float], w1: str, w2: str) -> "ContrastJudgment":
        pair = (w1, w2) if w1 <= w2 else (w2, w1)
        return ContrastJudgment(tier, pmi, pair)


def degree_compare(j1: ContrastJudgment, j2: ContrastJudgment) -> int:
    """Total-order comparator: 1 if j1 is more contrasting, -1 if less, 0 if equal.

    Tiers dominate; within a tier a defined PMI beats undefined and a higher
    PMI beats a lower one; the final tie-break is lexicographic on the
    canonical pair (smaller pair ranks as more contrasting) so the order is
    deterministic.
    """
    if j1.tier.value != j2.tier.value:
        return 1 if j1.tier.value > j2.tier.value else -1
    if (j1.pmi is None) != (j2.pmi is None):
        return 1 if j2.pmi is None else -1
    if j1.pmi is not None and j2.pmi is not None and j1.pmi != j2.pmi:
        return 1 if j1.pmi > j2.pmi else -1
    if j1.pair != j2.pair:
        return 1 if j1.pair < j2.pair else -1
    return 0


def _tier_i_pairs(index: ContrastIndex, thesaurus: Thesaurus) -> set[tuple[str, str]]:
    out: set[tuple[str, str]] = set()
    for catpair in index.adjacency_pairs:
        a, b = sorted(catpair)
        if not (thesaurus.has_category(a) and thesaurus.has_category(b)):
            continue
        for w1, w2 in itertools.product(thesaurus.category(a).words(),
                                        thesaurus.category(b).words()):
            if w1 != w2:
                out.add((w1, w2) if w1 < w2 else (w2, w1))
    return out


def _tier_ii_pairs(index: ContrastIndex, thesaurus: Thesaurus,
                   exclude: set[tuple[str, str]]) -> set[tuple[str, str]]:
    out: set[tuple[str, str]] = set()
    for prime in index.prime_paragraphs:
        (c1, p1), (c2, p2) = sorted(prime)
        words1 = thesaurus.paragraph_at(c1, p1).words
        words2 = thesaurus.paragraph_at(c2, p2).words
        for w1, w2 in itertools.product(words1, words2):
            if w1 == w2:
                continue
            pair = (w1, w2) if w1 < w2 else (w2, w1)
            if pair not in exclude:
                out.add(pair)
    return out


def build_lexicon(index: ContrastIndex, thesaurus: Thesaurus,
                  tiers: Iterable[Tier], path: str) -> int:
    """Write the Class I / Class II contrast lexicon; returns the pair count.

    Lines are ``word1<TAB>word2<TAB>tier`` with word1 < word2, sorted.
    Class III is not enumerable by contract.
    """
    tiers = set(tiers)
    if not tiers:
        raise ValueError("no tiers requested")
    if not tiers <= {Tier.I, Tier.II}:
        raise ValueError("lexicon generation supports tiers I and II only")

    tier_i = _tier_i_pairs(index, thesaurus)
    rows: dict[tuple[str, str], str] = {}
    if Tier.I in tiers:
        for pair in tier_i:
            rows[pair] = "I"
    if Tier.II in tiers:
        for pair in _tier_ii_pairs(index, thesaurus, exclude=tier_i):
            rows.setdefault(pair, "II")

    with open(path, "w", encoding="utf-8") as handle:
        for (w1, w2) in sorted(rows):
            handle.write(f"{w1}\t{w2}\t{rows[(w1, w2)]}\n")
    return len(rows)
