"""Pure-Python windowed pair-counting kernel (fallback for the C extension)."""

from __future__ import annotations

KERNEL = "pure"


def count_sentence(tokens: list[str], window: int, pair_counts: dict) -> int:
    """Count unordered token pairs at most ``window - 1`` positions apart.

    Each co-occurring position pair increments its pair count once.
    Returns the number of position pairs counted.
    """
    n = len(tokens)
    windows = 0
    for i in range(n):
        hi = i + window
        if hi > n:
            hi = n
        for j in range(i + 1, hi):
            a = tokens[i]
            b = tokens[j]
            if b < a:
                a, b = b, a
            key = (a, b)
            if key in pair_counts:
                pair_counts[key] += 1
            else:
                pair_counts[key] = 1
            windows += 1
    return windows
