"""Benchmark the wall-enumeration kernels: compiled extension vs pure Python.

Runs the raw kernel (enumerate + group candidate walls) on a few
representative types and reports best-of-N wall-clock times, plus the
end-to-end ``candidate_walls`` time for the largest type so the share of
Python-side post-processing (sorting, Fraction boxing, validation) is
visible.

Usage:
    python benchmarks/bench_walls.py [--repeats N]
"""

import argparse
import time

from cohsys.core import CSType
from cohsys.walls import active_backend, admissible_sup, candidate_walls
from cohsys import _wallscan_py

try:
    from cohsys import _wallscan
except ImportError:
    _wallscan = None

TYPES = [
    CSType(10, 20, 13),
    CSType(20, 40, 26),
    CSType(40, 80, 50),
    CSType(98, 196, 106),
]


def _sup_args(t):
    sup = admissible_sup(t)
    if sup is None:
        return False, 0, 1
    return True, sup.numerator, sup.denominator


def _best_of(repeats, fn, *args):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        elapsed = time.perf_counter() - t0
        if best is None or elapsed < best:
            best = elapsed
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="best-of repetitions per cell")
    args = parser.parse_args()

    print(f"active backend for the library: {active_backend()}")
    if _wallscan is None:
        print("compiled kernel not built; timing the pure kernel only\n")
    header = f"{'type':>14} {'walls':>8} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for t in TYPES:
        has_sup, sn, sd = _sup_args(t)
        kernel_args = (t.n, t.d, t.k, has_sup, sn, sd)
        pure_t, grouped = _best_of(args.repeats, _wallscan_py.wall_candidates, *kernel_args)
        if _wallscan is not None:
            comp_t, comp_grouped = _best_of(args.repeats, _wallscan.wall_candidates, *kernel_args)
            if comp_grouped != grouped:
                raise SystemExit(f"kernel outputs disagree for {t}")
            comp_col, ratio = f"{comp_t:13.4f}", f"{pure_t / comp_t:7.1f}x"
        else:
            comp_col, ratio = f"{'-':>13}", f"{'-':>8}"
        print(f"{str(t):>14} {len(grouped):>8} {pure_t:10.4f} {comp_col} {ratio}")

    big = TYPES[-1]
    total, _ = _best_of(args.repeats, candidate_walls, big)
    print(f"\nend-to-end candidate_walls({big}): {total:.4f}s with the {active_backend()} backend")


if __name__ == "__main__":
    main()
