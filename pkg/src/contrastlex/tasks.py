"""Most-contrasting-word question solving, synonym-vs-opposite decision list,
baselines, and precision/recall/F scoring."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .contrast import (AdjacencyMode, ContrastIndex, ContrastJudgment, Tier,
                       contrast_class, degree_compare)
from .corpus import CooccurrenceStore, pmi
from .seeds import SeedPair
from .thesaurus import Thesaurus

SYNONYM = "synonym"
OPPOSITE = "opposite"
UNKNOWN = "unknown"


class TaskError(Exception):
    """Malformed question or pair input."""


@dataclass(frozen=True)
class ContrastQuestion:
    target: str
    alternatives: tuple[str, ...]
    answer_index: int

    def __post_init__(self) -> None:
        if not 4 <= len(self.alternatives) <= 5:
            raise TaskError(f"{self.target!r}: need 4 or 5 alternatives")
        if not 0 <= self.answer_index < len(self.alternatives):
            raise TaskError(f"{self.target!r}: answer index out of range")
        if self.target in self.alternatives:
            raise TaskError(f"{self.target!r}: target listed among alternatives")


@dataclass(frozen=True)
class PairRelationItem:
    word1: str
    word2: str
    gold: str

    def __post_init__(self) -> None:
        if self.word1 == self.word2:
            raise TaskError(f"self-pair {self.word1!r}")
        if self.gold not in (SYNONYM, OPPOSITE):
            raise TaskError(f"bad gold label {self.gold!r}")


@dataclass(frozen=True)
class EvalResult:
    attempted: int
    correct: int
    total: int
    precision: float
    recall: float
    f_score: float
    precision_defined: bool = True


def load_questions(path: str) -> list[ContrastQuestion]:
    """Parse the question file; multiword targets or alternatives are discarded."""
    questions = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise TaskError(f"{path}:{lineno}: malformed question line")
            target = fields[0].casefold()
            alts = tuple(a.casefold() for a in fields[1].split("|"))
            try:
                answer = int(fields[2])
            except ValueError:
                raise TaskError(f"{path}:{lineno}: bad answer index") from None
            if " " in target or any(" " in a for a in alts):
                continue
            try:
                questions.append(ContrastQuestion(target, alts, answer))
            except TaskError as exc:
                raise TaskError(f"{path}:{lineno}: {exc}") from None
    return questions


def load_pairs(path: str) -> list[PairRelationItem]:
    items = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise TaskError(f"{path}:{lineno}: malformed pair line")
            try:
                items.append(PairRelationItem(fields[0].casefold(),
                                              fields[1].casefold(),
                                              fields[2]))
            except TaskError as exc:
                raise TaskError(f"{path}:{lineno}: {exc}") from None
    return items


def judge(index: ContrastIndex, thesaurus: Thesaurus,
          store: Optional[CooccurrenceStore], w1: str, w2: str,
          adjacency_mode: AdjacencyMode) -> ContrastJudgment:
    tier = contrast_class(index, thesaurus, w1, w2, adjacency_mode)
    value = pmi(store, w1, w2) if store is not None else None
    return ContrastJudgment.make(tier, value, w1, w2)


def solve_question(question: ContrastQuestion, index: ContrastIndex,
                   thesaurus: Thesaurus, store: Optional[CooccurrenceStore],
                   adjacency_mode: AdjacencyMode) -> Optional[int]:
    """Index of the most contrasting alternative, or None to abstain.

    Abstains when every alternative judges to tier NONE. Ties under the
    degree comparator fall to the lowest alternative index.
    """
    judgments = [judge(index, thesaurus, store, question.target, alt, adjacency_mode)
                 for alt in question.alternatives]
    if all(j.tier is Tier.NONE for j in judgments):
        return None
    best = 0
    for i in range(1, len(judgments)):
        if degree_compare(judgments[i], judgments[best]) > 0:
            best = i
    return best


def apply_rules(w1: str, w2: str, index: ContrastIndex, thesaurus: Thesaurus,
                adjacency_mode: AdjacencyMode) -> str:
    """Synonym-vs-opposite decision list; first firing rule wins.

    Rule 1: adjacent categories -> opposite. Rule 2: shared category ->
    synonym. Rule 3: prime contrasting paragraphs -> opposite. Otherwise
    unknown.
    """
    locs1 = thesaurus.locate(w1)
    locs2 = thesaurus.locate(w2)
    if not locs1 or not locs2:
        return UNKNOWN
    cats1 = {l.category_number for l in locs1}
    cats2 = {l.category_number for l in locs2}
    for a in cats1:
        for b in cats2:
            if a != b and adjacency_mode.adjacent(a, b):
                return OPPOSITE
    if cats1 & cats2:
        return SYNONYM
    paras1 = {(l.category_number, l.paragraph_index) for l in locs1}
    paras2 = {(l.category_number, l.paragraph_index) for l in locs2}
    for p1 in paras1:
        for p2 in paras2:
            if p1 != p2 and frozenset((p1, p2)) in index.prime_paragraphs:
                return OPPOSITE
    return UNKNOWN


def classify_pair(w1: str, w2: str, index: ContrastIndex, thesaurus: Thesaurus,
                  adjacency_mode: AdjacencyMode, fallback: str = "refrain",
                  rng: Optional[random.Random] = None) -> str:
    """Single-pair classification. The predominant fallback needs a batch;
    use :func:`classify_pairs` for it."""
    label = apply_rules(w1, w2, index, thesaurus, adjacency_mode)
    if label != UNKNOWN:
        return label
    if fallback == "refrain":
        return UNKNOWN
    if fallback == "random":
        if rng is None:
            raise ValueError("random fallback needs an rng")
        return rng.choice((SYNONYM, OPPOSITE))
    raise ValueError(f"unsupported fallback {fallback!r} for a single pair")


def classify_pairs(pairs: Sequence[tuple[str, str]], index: ContrastIndex,
                   thesaurus: Thesaurus, adjacency_mode: AdjacencyMode,
                   fallback: str = "refrain", seed: int = 0) -> list[str]:
    """Batch classification with one of the three no-information policies.

    ``predominant`` is two-pass: rules first, then every undecided pair gets
    the majority rule-decided label (ties default to opposite).
    """
    labels = [apply_rules(w1, w2, index, thesaurus, adjacency_mode)
              for w1, w2 in pairs]
    if fallback == "refrain":
        return labels
    if fallback == "random":
        rng = random.Random(seed)
        return [rng.choice((SYNONYM, OPPOSITE)) if lab == UNKNOWN else lab
                for lab in labels]
    if fallback == "predominant":
        n_opp = sum(1 for lab in labels if lab == OPPOSITE)
        n_syn = sum(1 for lab in labels if lab == SYNONYM)
        majority = SYNONYM if n_syn > n_opp else OPPOSITE
        return [majority if lab == UNKNOWN else lab for lab in labels]
    raise ValueError(f"unknown fallback {fallback!r}")


def evaluate_questions(questions: Sequence[ContrastQuestion],
                       outputs: Sequence[Optional[int]]) -> EvalResult:
    """P = correct/attempted, R = correct/total, F = harmonic mean of P and R."""
    if len(questions) != len(outputs):
        raise TaskError("outputs not aligned with questions")
    total = len(questions)
    attempted = sum(1 for out in outputs if out is not None)
    correct = sum(1 for q, out in zip(questions, outputs)
                  if out is not None and out == q.answer_index)
    precision_defined = attempted > 0
    precision = correct / attempted if precision_defined else 0.0
    recall = correct / total if total else 0.0
    f_score = (2 * precision * recall / (precision + recall)
               if precision + recall > 0 else 0.0)
    return EvalResult(attempted, correct, total, precision, recall, f_score,
                      precision_defined)


def evaluate_labels(items: Sequence[PairRelationItem],
                    labels: Sequence[str]) -> EvalResult:
    """Score synonym/opposite labels; UNKNOWN counts as not attempted."""
    if len(items) != len(labels):
        raise TaskError("labels not aligned with items")
    total = len(items)
    attempted = sum(1 for lab in labels if lab != UNKNOWN)
    correct = sum(1 for item, lab in zip(items, labels) if lab == item.gold)
    precision_defined = attempted > 0
    precision = correct / attempted if precision_defined else 0.0
    recall = correct / total if total else 0.0
    f_score = (2 * precision * recall / (precision + recall)
               if precision + recall > 0 else 0.0)
    return EvalResult(attempted, correct, total, precision, recall, f_score,
                      precision_defined)


def random_baseline(questions: Sequence[ContrastQuestion], trials: int,
                    seed: int = 0) -> float:
    """Mean accuracy of guessing one alternative uniformly at random."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not questions:
        raise ValueError("no questions")
    rng = random.Random(seed)
    total_correct = 0
    for _ in range(trials):
        for q in questions:
            if rng.randrange(len(q.alternatives)) == q.answer_index:
                total_correct += 1
    return total_correct / (trials * len(questions))


def seed_lookup_baseline(questions: Sequence[ContrastQuestion],
                         seeds: Iterable[SeedPair],
                         unmatched: str = "abstain",
                         seed: int = 0) -> EvalResult:
    """Answer only when a target-alternative pair matches a seed opposite.

    Unmatched questions are abstained from or guessed at random per
    ``unmatched`` ("abstain" or "random").
    """
    if unmatched not in ("abstain", "random"):
        raise ValueError(f"unknown unmatched policy {unmatched!r}")
    pair_set = {s.pair() for s in seeds}
    rng = random.Random(seed)
    outputs: list[Optional[int]] = []
    for q in questions:
        chosen: Optional[int] = None
        for i, alt in enumerate(q.alternatives):
            key = (q.target, alt) if q.target <= alt else (alt, q.target)
            if key in pair_set:
                chosen = i
                break
        if chosen is None and unmatched == "random":
            chosen = rng.randrange(len(q.alternatives))
        outputs.append(chosen)
    return evaluate_questions(questions, outputs)
