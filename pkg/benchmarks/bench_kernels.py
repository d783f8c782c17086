#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths on representative workloads: the all-pairs BFS
metric, interval-table construction, hull enumeration over all subsets
(the convex-set oracle), and a full pre-hull-number sweep.  Run with
``python benchmarks/bench_kernels.py [--quick]``.
"""

from __future__ import annotations

import argparse
import time

from partialcube import pre_hull_number
from partialcube._kernels import compiled_module, pure
from partialcube.constructions import (
    cartesian_product,
    cycle_graph,
    hypercube,
    m_n_1,
    path_graph,
    random_bipartite,
)

compiled = compiled_module()


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _kernel_workloads(quick: bool):
    graphs = [
        ("M_4_1 (n=14)", m_n_1(4)),
        ("random bipartite n=12", random_bipartite(12, 0.5, 7)),
    ]
    if not quick:
        graphs.append(("Q_4 (n=16)", hypercube(4)))
    for label, g in graphs:
        n = g.n
        adj = list(g.neighbor_masks)
        dist = pure.bfs_all_pairs(n, adj)
        itable = pure.interval_table(n, dist)
        yield f"bfs_all_pairs      {label}", (
            lambda n=n, adj=adj: pure.bfs_all_pairs(n, adj),
            lambda n=n, adj=adj: compiled.bfs_all_pairs(n, adj),
        )
        yield f"interval_table     {label}", (
            lambda n=n, dist=dist: pure.interval_table(n, dist),
            lambda n=n, dist=dist: compiled.interval_table(n, dist),
        )
        citable = compiled.interval_table(n, dist) if compiled else None
        yield f"hull_family (2^n)  {label}", (
            lambda n=n, it=itable: pure.hull_family(n, it),
            lambda n=n, it=citable: compiled.hull_family(n, it),
        )


def _sweep(backend_env):
    # fresh graphs so nothing is cached between backends
    graphs = [
        cartesian_product(hypercube(3), path_graph(4)).graph,
        cartesian_product(cycle_graph(6), cycle_graph(4)).graph,
        m_n_1(4),
    ]
    for g in graphs:
        pre_hull_number(g)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels are not built; showing pure timings only")
    print(f"{'workload':42s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, (pure_fn, compiled_fn) in _kernel_workloads(args.quick):
        tp = _time(pure_fn)
        if compiled is None:
            print(f"{label:42s} {tp * 1000:9.2f}ms {'-':>10s} {'-':>8s}")
            continue
        tc = _time(compiled_fn)
        print(
            f"{label:42s} {tp * 1000:9.2f}ms {tc * 1000:9.2f}ms {tp / tc:7.1f}x"
        )

    # end-to-end: pre-hull numbers of three mid-sized partial cubes
    import os
    import subprocess
    import sys

    snippet = (
        "import time; t0=time.perf_counter();"
        "from benchmarks.bench_kernels import _sweep; _sweep(None);"
        "print('%.3f' % (time.perf_counter()-t0))"
    )
    env = dict(os.environ)
    env["PYTHONPATH"] = os.getcwd()
    env.pop("PARTIALCUBE_PURE", None)
    t_compiled = float(
        subprocess.run(
            [sys.executable, "-c", snippet], env=env, capture_output=True, text=True
        ).stdout.strip()
        or "nan"
    )
    env["PARTIALCUBE_PURE"] = "1"
    t_pure = float(
        subprocess.run(
            [sys.executable, "-c", snippet], env=env, capture_output=True, text=True
        ).stdout.strip()
        or "nan"
    )
    label = "pre_hull_number sweep (3 partial cubes)"
    print(f"{label:42s} {t_pure * 1000:9.2f}ms {t_compiled * 1000:9.2f}ms "
          f"{t_pure / t_compiled:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
