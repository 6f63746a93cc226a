"""Windowed co-occurrence counting, PMI, and set-level association statistics.

The inner pair-counting loop is provided by a compiled Cython kernel when
available, with a pure-Python fallback selected at import time. Set
``CONTRASTLEX_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

from scipy import stats as _scipy_stats

if os.environ.get("CONTRASTLEX_PURE"):
    from . import _countpure as _kernel
else:
    try:
        from . import _countcore as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _countpure as _kernel

KERNEL = _kernel.KERNEL


class CorpusError(Exception):
    """Bad corpus input or counts file."""


def canonical(w1: str, w2: str) -> tuple[str, str]:
    return (w1, w2) if w1 <= w2 else (w2, w1)


@dataclass
class CooccurrenceStore:
    unigram_counts: dict[str, int] = field(default_factory=dict)
    pair_counts: dict[tuple[str, str], int] = field(default_factory=dict)
    total_tokens: int = 0
    total_windows: int = 0

    def unigram(self, word: str) -> int:
        return self.unigram_counts.get(word, 0)

    def pair(self, w1: str, w2: str) -> int:
        return self.pair_counts.get(canonical(w1, w2), 0)

    def validate(self) -> None:
        if self.total_tokens <= 0 or self.total_windows <= 0:
            raise CorpusError("totals must be positive")
        for (a, b), count in self.pair_counts.items():
            if count < 0:
                raise CorpusError(f"negative pair count for ({a}, {b})")
            if count > 0 and (self.unigram(a) == 0 or self.unigram(b) == 0):
                raise CorpusError(f"pair ({a}, {b}) counted without unigram counts")
        for word, count in self.unigram_counts.items():
            if count < 0:
                raise CorpusError(f"negative unigram count for {word!r}")


def count_corpus(path: str, window: int = 5) -> CooccurrenceStore:
    """Count unigrams and windowed co-occurrences from sentence-per-line text.

    Tokens are whitespace-split and case-folded; windows never cross
    sentence boundaries.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    store = CooccurrenceStore()
    unigrams = store.unigram_counts
    pairs = store.pair_counts
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            tokens = line.casefold().split()
            if not tokens:
                continue
            for tok in tokens:
                unigrams[tok] = unigrams.get(tok, 0) + 1
            store.total_tokens += len(tokens)
            store.total_windows += _kernel.count_sentence(tokens, window, pairs)
    if store.total_tokens == 0:
        raise CorpusError(f"empty corpus: {path}")
    return store


def load_counts(path: str) -> CooccurrenceStore:
    """Load a pre-aggregated counts file (U/P/T records)."""
    store = CooccurrenceStore()
    saw_totals = False
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            tag = fields[0]
            try:
                if tag == "U" and len(fields) == 3:
                    word, count = fields[1], int(fields[2])
                    if count < 0:
                        raise ValueError("negative count")
                    store.unigram_counts[word] = store.unigram_counts.get(word, 0) + count
                elif tag == "P" and len(fields) == 4:
                    a, b, count = fields[1], fields[2], int(fields[3])
                    if count < 0:
                        raise ValueError("negative count")
                    key = canonical(a, b)
                    store.pair_counts[key] = store.pair_counts.get(key, 0) + count
                elif tag == "T" and len(fields) == 3:
                    if saw_totals:
                        raise ValueError("duplicate totals record")
                    saw_totals = True
                    store.total_tokens = int(fields[1])
                    store.total_windows = int(fields[2])
                else:
                    raise ValueError(f"malformed record {line!r}")
            except ValueError as exc:
                raise CorpusError(f"{path}:{lineno}: {exc}") from None
    if not saw_totals:
        raise CorpusError(f"{path}: missing totals (T) record")
    store.validate()
    return store


def save_counts(store: CooccurrenceStore, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for word in sorted(store.unigram_counts):
            handle.write(f"U\t{word}\t{store.unigram_counts[word]}\n")
        for a, b in sorted(store.pair_counts):
            handle.write(f"P\t{a}\t{b}\t{store.pair_counts[(a, b)]}\n")
        handle.write(f"T\t{store.total_tokens}\t{store.total_windows}\n")


def pmi(store: CooccurrenceStore, w1: str, w2: str) -> Optional[float]:
    """log2 of joint probability over the product of marginals; None if undefined.

    Joint probability normalizes by total_windows, marginals by total_tokens.
    Undefined when the pair count or either unigram count is zero.
    """
    joint = store.pair(w1, w2)
    c1 = store.unigram(w1)
    c2 = store.unigram(w2)
    if joint == 0 or c1 == 0 or c2 == 0:
        return None
    p_joint = joint / store.total_windows
    p1 = c1 / store.total_tokens
    p2 = c2 / store.total_tokens
    return math.log2(p_joint / (p1 * p2))


@dataclass(frozen=True)
class AssociationStats:
    mean_pmi: float
    stddev_pmi: float
    n_defined: int


def association_stats(store: CooccurrenceStore,
                      pairs: Iterable[tuple[str, str]]) -> AssociationStats:
    """Mean and population standard deviation of the defined PMIs of ``pairs``."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("no pairs supplied")
    values = [v for v in (pmi(store, a, b) for a, b in pairs) if v is not None]
    if not values:
        raise CorpusError("all PMIs undefined")
    mean = sum(values) / len(values)
    var = sum((v - mean) ** 2 for v in values) / len(values)
    return AssociationStats(mean, math.sqrt(var), len(values))


def two_sample_t_test(sample_a: list[float], sample_b: list[float]) -> tuple[float, float]:
    """Welch's unequal-variance two-sample t-test; returns (t, two-sided p)."""
    if len(sample_a) < 2 or len(sample_b) < 2:
        raise ValueError("each sample needs at least two values")
    result = _scipy_stats.ttest_ind(sample_a, sample_b, equal_var=False)
    return float(result.statistic), float(result.pvalue)
