# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython windowed pair-counting kernel; mirrors _countpure exactly."""

KERNEL = "cython"


def count_sentence(list tokens, int window, dict pair_counts):
    """Count unordered token pairs at most ``window - 1`` positions apart.

    Each co-occurring position pair increments its pair count once.
    Returns the number of position pairs counted.
    """
    cdef Py_ssize_t n = len(tokens)
    cdef Py_ssize_t i, j, hi
    cdef long windows = 0
    cdef object a, b, key, cur
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
            cur = pair_counts.get(key)
            if cur is None:
                pair_counts[key] = 1
            else:
                pair_counts[key] = cur + 1
            windows += 1
    return windows
