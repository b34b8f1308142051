#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the decomposition pipeline (minimal triangulation -> atom tree) and
the atom-graph construction (intersection graph -> max-weight union) on
random connected graphs, once per backend, and checks that both backends
produce identical results while at it.

    python benchmarks/bench_backends.py --sizes 100,200,400 --avg-degree 8
"""

from __future__ import annotations

import argparse
import random
import time

import sepdec
from sepdec._kernels import available_backends, set_backend


def random_connected_graph(rng: random.Random, n: int, avg_degree: float) -> sepdec.Graph:
    p_edge = min(1.0, avg_degree / max(n - 1, 1))
    names = [f"v{i}" for i in range(n)]
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p_edge
    ]
    g = sepdec.Graph(names, edges)
    comps = sepdec.connected_components(g)
    while len(comps) > 1:
        edges.append((names[min(comps[0])], names[min(comps[1])]))
        g = sepdec.Graph(names, edges)
        comps = sepdec.connected_components(g)
    return g


def run_pipeline(g: sepdec.Graph):
    t = sepdec.atom_tree(g)
    ag = sepdec.atom_graph_max_weight(
        sepdec.weighted_intersection_graph(t.nodes)
    )
    return t, ag


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,200,400", help="comma-separated vertex counts")
    parser.add_argument("--avg-degree", type=float, default=8.0)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = available_backends()
    if "c" not in backends:
        print("compiled backend not built; nothing to compare")
        return 1
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"backends: {backends}   repeat: {args.repeat}   avg degree: {args.avg_degree}")
    print(f"{'n':>6} {'m':>8} {'python (s)':>12} {'c (s)':>12} {'speedup':>9}")
    for n in sizes:
        rng = random.Random(args.seed)
        g = random_connected_graph(rng, n, args.avg_degree)
        g.csr()  # shared CSR cache; excluded from timing either way
        timings = {}
        results = {}
        for backend in ("python", "c"):
            set_backend(backend)
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[backend] = run_pipeline(g)
                best = min(best, time.perf_counter() - t0)
            timings[backend] = best
        if results["python"] != results["c"]:
            print(f"n={n}: BACKEND MISMATCH")
            return 1
        speedup = timings["python"] / timings["c"] if timings["c"] > 0 else float("inf")
        print(
            f"{n:>6} {g.m:>8} {timings['python']:>12.4f} {timings['c']:>12.4f} {speedup:>8.1f}x"
        )
    set_backend("c")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
