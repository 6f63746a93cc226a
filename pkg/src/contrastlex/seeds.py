"""Seed opposite pairs: affix-generated, external lists, adjacency annotations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .thesaurus import Thesaurus


class SeedError(Exception):
    """Malformed seed or annotation input."""


@dataclass(frozen=True)
class AffixPattern:
    """A pair of (prefix, suffix) templates sharing a stem X.

    word1 = prefix1 + X + suffix1, word2 = prefix2 + X + suffix2.
    """

    id: int
    prefix1: str
    suffix1: str
    prefix2: str
    suffix2: str

    def stem1(self, word: str) -> Optional[str]:
        return self._stem(word, self.prefix1, self.suffix1)

    def stem2(self, word: str) -> Optional[str]:
        return self._stem(word, self.prefix2, self.suffix2)

    @staticmethod
    def _stem(word: str, prefix: str, suffix: str) -> Optional[str]:
        if not word.startswith(prefix) or not word.endswith(suffix):
            return None
        stem = word[len(prefix):len(word) - len(suffix) if suffix else len(word)]
        return stem or None

    def word1(self, stem: str) -> str:
        return self.prefix1 + stem + self.suffix1

    def word2(self, stem: str) -> str:
        return self.prefix2 + stem + self.suffix2


_PATTERNS = [
    (1, "", "", "anti", ""),
    (2, "", "", "dis", ""),
    (3, "", "", "im", ""),
    (4, "", "", "in", ""),
    (5, "", "", "mal", ""),
    (6, "", "", "mis", ""),
    (7, "", "", "non", ""),
    (8, "", "", "un", ""),
    (9, "l", "", "ill", ""),
    (10, "r", "", "irr", ""),
    (11, "im", "", "ex", ""),
    (12, "in", "", "ex", ""),
    (13, "up", "", "down", ""),
    (14, "over", "", "under", ""),
    (15, "", "less", "", "ful"),
]


def builtin_affix_patterns() -> list[AffixPattern]:
    """The fifteen opposing-affix patterns (clockwise/anticlockwise ... harmless/harmful)."""
    return [AffixPattern(*spec) for spec in _PATTERNS]


@dataclass(frozen=True, order=True)
class SeedPair:
    """An opposite word pair in canonical (sorted) order with provenance."""

    word1: str
    word2: str
    source: str  # "affix:<id>", "external_list", or "adjacency"

    @staticmethod
    def make(a: str, b: str, source: str) -> "SeedPair":
        if a == b:
            raise SeedError(f"self-pair {a!r}")
        if b < a:
            a, b = b, a
        return SeedPair(a, b, source)

    def pair(self) -> tuple[str, str]:
        return (self.word1, self.word2)


def affix_source(pattern_id: int) -> str:
    return f"affix:{pattern_id}"


def generate_affix_seeds(thesaurus: Thesaurus,
                         patterns: Optional[Iterable[AffixPattern]] = None) -> list[SeedPair]:
    """Generate seed opposites by applying affix patterns to thesaurus unigrams.

    A pair is emitted only when its mate is also a thesaurus word. Patterns
    are matched in both directions; the unaffixed member must be at least
    three characters long. Pairs generable by several patterns keep the
    lowest pattern id.
    """
    if patterns is None:
        patterns = builtin_affix_patterns()
    patterns = list(patterns)
    if not patterns:
        raise SeedError("no affix patterns supplied")
    vocab = thesaurus.unigrams()
    best: dict[tuple[str, str], int] = {}
    for word in vocab:
        for pat in patterns:
            # word as the base (word1) form
            stem = pat.stem1(word)
            if stem is not None and len(word) >= 3:
                mate = pat.word2(stem)
                if mate != word and mate in vocab:
                    _record(best, word, mate, pat.id)
            # word as the affixed (word2) form
            stem = pat.stem2(word)
            if stem is not None:
                mate = pat.word1(stem)
                if mate != word and len(mate) >= 3 and mate in vocab:
                    _record(best, mate, word, pat.id)
    return sorted(SeedPair.make(a, b, affix_source(pid))
                  for (a, b), pid in best.items())


def _record(best: dict[tuple[str, str], int], a: str, b: str, pattern_id: int) -> None:
    key = (a, b) if a < b else (b, a)
    prev = best.get(key)
    if prev is None or pattern_id < prev:
        best[key] = pattern_id


def load_seed_list(path: str, thesaurus: Optional[Thesaurus] = None) -> list[SeedPair]:
    """Load external opposite pairs (one ``word1<TAB>word2`` per line).

    When a thesaurus is supplied, pairs with either member missing from it
    are dropped.
    """
    vocab = thesaurus.words() if thesaurus is not None else None
    pairs: set[SeedPair] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not all(fields):
                raise SeedError(f"{path}:{lineno}: malformed seed line: {line!r}")
            a, b = (f.casefold() for f in fields)
            if a == b:
                raise SeedError(f"{path}:{lineno}: self-pair {a!r}")
            if vocab is not None and (a not in vocab or b not in vocab):
                continue
            pairs.add(SeedPair.make(a, b, "external_list"))
    return sorted(pairs)


def write_seed_file(pairs: Iterable[SeedPair], path: str) -> int:
    """Write pairs in the seed file format; returns the number written."""
    rows = sorted({p.pair() for p in pairs})
    with open(path, "w", encoding="utf-8") as handle:
        for a, b in rows:
            handle.write(f"{a}\t{b}\n")
    return len(rows)


def load_adjacency_annotations(path: str) -> set[frozenset[int]]:
    """Load manually annotated contrasting category-number pairs.

    Non-consecutive numbers are allowed (e.g. a category contrasting with
    both of the next two categories).
    """
    pairs: set[frozenset[int]] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise SeedError(f"{path}:{lineno}: malformed annotation line: {line!r}")
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise SeedError(f"{path}:{lineno}: non-numeric category pair: {line!r}") from None
            if a == b:
                raise SeedError(f"{path}:{lineno}: self-pair {a}")
            pairs.add(frozenset((a, b)))
    return pairs
