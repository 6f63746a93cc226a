"""Benchmark the compiled counting kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_count.py [--sentences N] [--window W]
"""

import argparse
import random
import time

from contrastlex import _countcore, _countpure


def make_sentences(n_sentences, rng):
    vocab = [f"w{i}" for i in range(500)]
    return [rng.choices(vocab, k=rng.randint(5, 30)) for _ in range(n_sentences)]


def run(kernel, sentences, window, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        pair_counts = {}
        windows = 0
        start = time.perf_counter()
        for tokens in sentences:
            windows += kernel.count_sentence(tokens, window, pair_counts)
        best = min(best, time.perf_counter() - start)
    return best, windows, pair_counts


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sentences", type=int, default=20000)
    parser.add_argument("--window", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sentences = make_sentences(args.sentences, random.Random(args.seed))
    tokens = sum(len(s) for s in sentences)
    print(f"corpus: {args.sentences} sentences, {tokens} tokens, "
          f"window={args.window}")

    t_pure, w_pure, c_pure = run(_countpure, sentences, args.window)
    t_cy, w_cy, c_cy = run(_countcore, sentences, args.window)
    assert (w_pure, c_pure) == (w_cy, c_cy), "kernels disagree"

    print(f"pure   ({_countpure.KERNEL}): {t_pure:.3f}s  "
          f"({tokens / t_pure / 1e6:.2f} Mtok/s)")
    print(f"cython ({_countcore.KERNEL}): {t_cy:.3f}s  "
          f"({tokens / t_cy / 1e6:.2f} Mtok/s)")
    print(f"speedup: {t_pure / t_cy:.2f}x")


if __name__ == "__main__":
    main()
