"""Timing comparison of the compiled and pure kernel backends.

Runs the full equivalence sweep (den <= 30 on [0, 2), 616048 pairs) and a
raw tangency-classification pass over all Farey-50 pairs through each
backend, and prints wall times with the speedup factor.

Usage: python3 benchmarks/bench_backends.py
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations
from math import gcd

from fordcircles import reduced_fractions_in, verify_sweep
from fordcircles import _kernel


def timed(fn) -> float:
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_sweep(backend: str) -> float:
    return timed(lambda: verify_sweep(30, 30, (Fraction(0), Fraction(2)),
                                      backend=backend))


def bench_gap(backend: str) -> float:
    kern = _kernel.get_backend(backend)
    pts = [(x.numerator, x.denominator)
           for x in reduced_fractions_in(Fraction(0), Fraction(1), 50)]

    def run():
        tangent = 0
        for (a, b), (c, d) in combinations(pts, 2):
            if kern.gap_class(a, b, c, d) == 0:
                tangent += 1
        assert tangent > 0

    return timed(run)


def bench_flags(backend: str) -> float:
    kern = _kernel.get_backend(backend)
    alphas = [(n, d) for d in range(1, 31) for n in range(0, 2 * d)
              if gcd(n, d) == 1]
    xs = [(n, d) for d in range(2, 31) for n in range(-d + 1, 3 * d)
          if gcd(abs(n), d) == 1]

    def run():
        for p, q in alphas:
            for a, b in xs:
                kern.pair_flags(a, b, p, q)

    return timed(run)


def main() -> None:
    try:
        _kernel.get_backend("compiled")
    except RuntimeError:
        print("compiled backend unavailable; nothing to compare")
        return
    rows = [
        ("verify_sweep den<=30 [0,2)", bench_sweep),
        ("pair_flags, 616048 calls", bench_flags),
        ("gap_class, 299925 pairs", bench_gap),
    ]
    print(f"{'benchmark':<30} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for label, bench in rows:
        pure = bench("pure")
        fast = bench("compiled")
        print(f"{label:<30} {pure:>8.3f}s {fast:>8.3f}s {pure / fast:>7.1f}x")


if __name__ == "__main__":
    main()
