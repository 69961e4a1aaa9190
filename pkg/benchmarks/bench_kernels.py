#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

The three workloads mirror what the exhaustive sweeps actually spend time
on: filtering all labeled graphs on n vertices, walking the cycle space
for connected even graphs, and the per-graph exact searches (cycle
enumeration plus cover/packing branch and bound).

Usage:
    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import itertools
import random
import sys
import time

from cyclesmith._kernels import pure

try:
    from cyclesmith._kernels import _fast as fast
except ImportError:
    fast = None


def timeit(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_filter(n, flags, label, rows, quick):
    size = 1 << (n * (n - 1) // 2)
    stop = size if not quick else min(size, 1 << 16)
    t_pure, r_pure = timeit(pure.filter_graph_masks, n, 0, stop, flags, repeat=1)
    if fast is None:
        rows.append((label, t_pure, None, len(r_pure)))
        return
    t_fast, r_fast = timeit(fast.filter_graph_masks, n, 0, stop, flags)
    assert r_fast == r_pure
    rows.append((label, t_pure, t_fast, len(r_pure)))


def bench_even_walk(n, rows, quick):
    size = pure.cycle_space_size(n)
    stop = size if not quick else min(size, 1 << 14)
    t_pure, r_pure = timeit(pure.connected_even_slice, n, 0, stop, repeat=1)
    if fast is None:
        rows.append((f"even walk n={n}", t_pure, None, len(r_pure)))
        return
    t_fast, r_fast = timeit(fast.connected_even_slice, n, 0, stop)
    assert r_fast == r_pure
    rows.append((f"even walk n={n}", t_pure, t_fast, len(r_pure)))


def bench_searches(rows, quick):
    rng = random.Random(2024)
    graphs = []
    count = 40 if quick else 300
    for _ in range(count):
        n = rng.randint(5, 7)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if rng.random() < 0.6]
        us = [u for u, _ in edges]
        vs = [v for _, v in edges]
        graphs.append((n, us, vs))

    def run(mod):
        out = 0
        for n, us, vs in graphs:
            c, *_ = mod.gce_exact(n, us, vs, 100_000, 10**7)
            f, *_ = mod.fan_exact(n, us, vs, 100_000, 10**7)
            out += c + f
        return out

    t_pure, r_pure = timeit(run, pure, repeat=1)
    if fast is None:
        rows.append((f"exact searches x{count}", t_pure, None, r_pure))
        return
    t_fast, r_fast = timeit(run, fast)
    assert r_fast == r_pure
    rows.append((f"exact searches x{count}", t_pure, t_fast, r_pure))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="shrink every workload (smoke test)")
    args = ap.parse_args()
    if fast is None:
        print("compiled kernels unavailable; timing the pure fallback only",
              file=sys.stderr)
    rows = []
    n_filter = 6 if not args.quick else 5
    bench_filter(n_filter, pure.CONNECTED, f"connected filter n={n_filter}",
                 rows, args.quick)
    bench_filter(n_filter, pure.CONNECTED | pure.CLAWFREE,
                 f"claw-free filter n={n_filter}", rows, args.quick)
    bench_even_walk(7 if not args.quick else 6, rows, args.quick)
    bench_searches(rows, args.quick)

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>8}  result")
    for label, t_pure, t_fast, result in rows:
        if t_fast is None:
            print(f"{label:<{width}}  {t_pure:>8.3f}s  {'-':>9}  {'-':>8}  {result}")
        else:
            print(f"{label:<{width}}  {t_pure:>8.3f}s  {t_fast:>8.3f}s  "
                  f"{t_pure / t_fast:>7.1f}x  {result}")


if __name__ == "__main__":
    main()
