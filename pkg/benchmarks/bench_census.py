#!/usr/bin/env python3
"""Benchmark the compiled census kernel against the pure Python fallback.

Runs the full sweep over every special subset K of [n-1] (the exact work
behind `quadrics verify --checks km`) with each available backend, checks
the results agree, and reports wall times.

usage: python benchmarks/bench_census.py [--n N] [--repeat R]
"""

import argparse
import time

from quadrics.kernel import available_backends
from quadrics.parabolic import enumerate_special


def sweep(backend, n):
    return {
        k.members: backend.cell_census(n, k.members) for k in enumerate_special(n)
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    subsets = enumerate_special(args.n)
    total = sum(1 for _ in subsets)
    print(f"n={args.n}: census sweep over {total} special subsets, best of {args.repeat}")

    results = {}
    timings = {}
    for name, backend in backends.items():
        best = float("inf")
        for _ in range(args.repeat):
            start = time.perf_counter()
            results[name] = sweep(backend, args.n)
            best = min(best, time.perf_counter() - start)
        timings[name] = best
        print(f"  {name:12s} {best * 1000:10.1f} ms")

    names = list(backends)
    for other in names[1:]:
        assert results[other] == results[names[0]], "backends disagree"
    if len(names) > 1:
        print("  backends agree on all censuses")
    if "compiled" in timings and "pure-python" in timings:
        print(f"  speedup: {timings['pure-python'] / timings['compiled']:.1f}x")


if __name__ == "__main__":
    main()
