#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallback.

Times the exhaustive antiautomorphism count and the existence search on a
ladder of groups, once per backend, and prints the speedups.  Run from the
repository root after an editable install:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --heavy   # adds order-13..15 counts
"""

import argparse
import time

from antiauto import kernel_backend, make_group
from antiauto import _kernel
from antiauto.search import count_antiautomorphisms, difference_index_table

COUNT_CASES = [(3,), (5,), (7,), (2, 2), (2, 4), (2, 2, 2), (9,), (3, 3), (2, 6)]
HEAVY_CASES = [(11,), (13,)]
EXIST_CASES = [(2, 4), (2, 2, 2), (2, 2, 4), (2, 8), (2, 4, 4), (4, 8)]


def time_call(fn, repeat=3):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def bench_counts(cases):
    print(f"{'group':14s} {'count':>12s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for moduli in cases:
        group = make_group(moduli)
        t_pure, v_pure = time_call(lambda: count_antiautomorphisms(group, backend="pure"), repeat=1)
        t_comp, v_comp = time_call(lambda: count_antiautomorphisms(group, backend="compiled"))
        assert v_pure == v_comp, f"backend mismatch on {group}"
        print(
            f"{str(group):14s} {v_comp:12d} {t_pure * 1e3:9.2f}ms {t_comp * 1e3:9.2f}ms "
            f"{t_pure / max(t_comp, 1e-9):7.1f}x"
        )


def bench_existence(cases):
    print(f"\n{'group':14s} {'found':>6s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for moduli in cases:
        group = make_group(moduli)
        n = group.order
        diff = difference_index_table(group)
        t_pure, v_pure = time_call(lambda: _kernel.mrv_first_completion(n, diff, (0,), backend="pure"))
        t_comp, v_comp = time_call(lambda: _kernel.mrv_first_completion(n, diff, (0,), backend="compiled"))
        assert v_pure == v_comp, f"backend mismatch on {group}"
        print(
            f"{str(group):14s} {'yes' if v_comp else 'no':>6s} {t_pure * 1e3:9.2f}ms "
            f"{t_comp * 1e3:9.2f}ms {t_pure / max(t_comp, 1e-9):7.1f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--heavy", action="store_true", help="include order 13-15 counts")
    args = parser.parse_args()

    if kernel_backend() != "compiled":
        raise SystemExit(
            "compiled kernel unavailable (or ANTIAUTO_PURE set); nothing to compare"
        )
    print("== exhaustive antiautomorphism counts ==")
    cases = COUNT_CASES + (HEAVY_CASES if args.heavy else [])
    bench_counts(cases)
    print("\n== existence search (fail-first, f(0)=0 pinned) ==")
    bench_existence(EXIST_CASES)


if __name__ == "__main__":
    main()
