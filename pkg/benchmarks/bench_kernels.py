#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the exact counting workloads on both backends, verifies the values
agree, and prints wall-clock timings with speedups.  The numba runs are
warmed up first so JIT compilation never pollutes a measurement.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from rootspin import FamilyRank, count_bruteforce, count_mitm, positive_roots
from rootspin import _kernels


def _sub_e8_differences() -> np.ndarray:
    rows = []
    for i in range(2, 9):
        for j in range(i + 1, 9):
            v = [0] * 8
            v[i - 1], v[j - 1] = 1, -1
            rows.append(v)
    return np.array(rows, dtype=np.int64)


WORKLOADS = [
    ("G2 brute (2^6)", lambda b: count_bruteforce(positive_roots(FamilyRank("G", 2)), backend=b)),
    ("F4 brute (2^24)", lambda b: count_bruteforce(positive_roots(FamilyRank("F", 4)), backend=b)),
    ("F4 mitm (2^12 x 2)", lambda b: count_mitm(positive_roots(FamilyRank("F", 4)), backend=b)),
    ("E6 mitm (2^18 x 2)", lambda b: count_mitm(positive_roots(FamilyRank("E", 6)), backend=b)),
    ("E8 diff sub-family brute (2^21)", lambda b: count_bruteforce(_sub_e8_differences(), backend=b)),
]


def best_of(fn, backend: str, repeats: int) -> tuple[float, int]:
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - start)
        value = result.value
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="best-of-N timing (default 3)")
    args = parser.parse_args()

    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not importable; nothing to compare")
    _kernels.warm_up("numba")

    name_w = max(len(name) for name, _ in WORKLOADS)
    print(f"{'workload':<{name_w}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}  value")
    print("-" * (name_w + 48))
    for name, fn in WORKLOADS:
        t_nb, v_nb = best_of(fn, "numba", args.repeats)
        t_np, v_np = best_of(fn, "numpy", args.repeats)
        if v_nb != v_np:
            raise SystemExit(f"{name}: backends disagree ({v_nb} vs {v_np})")
        print(
            f"{name:<{name_w}}  {t_nb * 1000:>8.2f}ms  {t_np * 1000:>8.2f}ms  "
            f"{t_np / t_nb:>7.1f}x  {v_nb}"
        )


if __name__ == "__main__":
    main()
