#!/usr/bin/env python3
"""Benchmark the jitted kernels against their pure-numpy fallbacks.

The workload is the snake pipeline's real hot path: materializing a snake's
codewords from its transition sequence, bulk inversion counting, and the
all-pairs minimum Kendall distance used by full verification.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --n 3 --repeat 5
    python benchmarks/bench_kernels.py --pairs-limit 4000
"""

import argparse
import time

import numpy as np

from ksnake import _kernels
from ksnake.assemble import he_snake


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3, help="half parameter of the snake workload")
    parser.add_argument("--repeat", type=int, default=3, help="repetitions; best time wins")
    parser.add_argument(
        "--pairs-limit",
        type=int,
        default=None,
        help="cap the row count for the all-pairs kernel (it is O(M^2))",
    )
    args = parser.parse_args()

    print(f"active backend: {_kernels.BACKEND}")
    snake = he_snake(args.n)
    rows = np.asarray(snake.codewords(), dtype=np.int64)
    if args.pairs_limit is not None:
        rows = rows[: args.pairs_limit]
    start = np.asarray(snake.initial, dtype=np.int64)
    transitions = np.asarray(snake.transitions, dtype=np.int64)
    print(f"workload: width {snake.width}, {len(transitions)} transitions, "
          f"{len(rows)} rows -> {len(rows) * (len(rows) - 1) // 2} pairs")

    jitted = []
    if _kernels.BACKEND == "numba":
        _kernels.warmup()
        jitted = [
            ("walk_codewords", _kernels._walk_codewords_jit, (start, transitions)),
            ("inversion_counts", _kernels._inversion_counts_jit, (rows,)),
            ("pairwise_min_kendall", _kernels._pairwise_min_kendall_jit, (rows,)),
        ]
    fallbacks = {
        "walk_codewords": (_kernels.walk_codewords_numpy, (start, transitions)),
        "inversion_counts": (_kernels.inversion_counts_numpy, (rows,)),
        "pairwise_min_kendall": (_kernels.pairwise_min_kendall_numpy, (rows,)),
    }

    header = f"{'kernel':>22} {'numba (s)':>12} {'numpy (s)':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, (np_fn, np_args) in fallbacks.items():
        t_np = best_of(args.repeat, np_fn, *np_args)
        jit_entry = next((j for j in jitted if j[0] == name), None)
        if jit_entry is None:
            print(f"{name:>22} {'-':>12} {t_np:>12.4f} {'-':>9}")
        else:
            t_jit = best_of(args.repeat, jit_entry[1], *jit_entry[2])
            print(f"{name:>22} {t_jit:>12.4f} {t_np:>12.4f} {t_np / t_jit:>8.1f}x")


if __name__ == "__main__":
    main()
