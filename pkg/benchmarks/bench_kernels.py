#!/usr/bin/env python3
"""Benchmark the compiled solver kernels against the pure-Python fallback.

Runs the exact chromatic-number and maximum-independent-set kernels on the
kind of instances the verification harness feeds them (random graphs and
two-step graphs of products up to the harness cap) and prints per-family
timings plus the speedup.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import sys
import time

from openpack import _kernels_py
from openpack.graph import complete, cycle, random_graph
from openpack.products import cartesian, lexicographic
from openpack.transforms import two_step

try:
    from openpack import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def instance_families():
    yield "random n=12 p=0.5", [random_graph(12, 0.5, s) for s in range(20)]
    yield "random n=18 p=0.4", [random_graph(18, 0.4, s) for s in range(12)]
    yield "random n=24 p=0.3", [random_graph(24, 0.3, s) for s in range(8)]
    prods = [
        two_step(cartesian(cycle(4), complete(3))[0]),
        two_step(cartesian(cycle(4), complete(4))[0]),
        two_step(cartesian(cycle(8), complete(3))[0]),
        two_step(lexicographic(cycle(4), complete(3))[0]),
    ]
    yield "two-step of products (n=12..24)", prods


def time_backend(kernel, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for g in graphs:
            adj = list(g.adj)
            kernel.chromatic_number(g.n, adj)
            kernel.max_independent_set(g.n, adj)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels not built; showing pure-Python timings only",
              file=sys.stderr)

    header = f"{'instance family':36} {'python':>10}"
    if _kernels_c is not None:
        header += f" {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, graphs in instance_families():
        t_py = time_backend(_kernels_py, graphs, args.repeat)
        line = f"{name:36} {t_py * 1e3:9.2f}ms"
        if _kernels_c is not None:
            t_c = time_backend(_kernels_c, graphs, args.repeat)
            line += f" {t_c * 1e3:9.2f}ms {t_py / t_c:7.1f}x"
        print(line)

    # sanity: identical results on one family
    for g in [random_graph(16, 0.5, s) for s in range(5)]:
        adj = list(g.adj)
        if _kernels_c is not None:
            assert _kernels_c.chromatic_number(g.n, adj) == \
                _kernels_py.chromatic_number(g.n, adj)
            assert _kernels_c.max_independent_set(g.n, adj) == \
                _kernels_py.max_independent_set(g.n, adj)
    print("\nbackends agree on spot-check instances")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
