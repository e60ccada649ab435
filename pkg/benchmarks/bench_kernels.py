#!/usr/bin/env python3
"""Benchmark the compiled counting kernels against the pure-Python
reference implementations.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

from homcert import _pykernels
from homcert.graphs import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    petersen,
)

try:
    from homcert import _kernels
except ImportError:
    _kernels = None


def cases():
    c16 = circulant(16, (1, 2, 3))
    return [
        ("hom  C5 -> Petersen", "hom_count", (cycle(5).rows, petersen().rows)),
        ("inj  C5 -> Petersen", "inj_count", (cycle(5).rows, petersen().rows)),
        ("hom  C6 -> C16(1,2,3)", "hom_count", (cycle(6).rows, c16.rows)),
        ("inj  K4 -> K12", "inj_count", (complete(4).rows, complete(12).rows)),
        (
            "inj  P5 -> K_{6,6}",
            "inj_count",
            (
                tuple(
                    sum(1 << u for u in (i - 1, i + 1) if 0 <= u < 5)
                    for i in range(5)
                ),
                complete_bipartite(6, 6).rows,
            ),
        ),
        (
            "canonical  Petersen",
            "canonical_min_rows",
            (petersen().rows,),
        ),
        (
            "enumerate  (10, 3)",
            "enumerate_regular_rows",
            (10, 3, _pykernels.CANON_BUDGET),
        ),
    ]


def measure(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--repeat", type=int, default=3, help="timing repetitions (best-of)"
    )
    args = parser.parse_args()

    if _kernels is None:
        print("compiled backend not available; timing pure Python only")
    header = f"{'case':<24} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, op, op_args in cases():
        py = measure(getattr(_pykernels, op), op_args, args.repeat)
        if _kernels is not None:
            cc = measure(getattr(_kernels, op), op_args, args.repeat)
            print(
                f"{name:<24} {py * 1e3:>10.3f}ms {cc * 1e3:>10.3f}ms "
                f"{py / cc:>8.1f}x"
            )
        else:
            print(f"{name:<24} {py * 1e3:>10.3f}ms {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
