"""Compare the numba kernels against the pure-numpy fallback.

Runs the hot paths (nearness graph construction, theorem degree sweep,
all-pairs BFS, power iteration) on a moderately sized random complex with
both backends and prints a timing table.  The numba path is warmed up first
so compilation time is reported separately from steady-state time.

Usage: python3 benchmarks/compare_backends.py [--n 16] [--seed 3]
"""

import argparse
import time

import numpy as np

from simpcent import kernels
from simpcent.generate import GeneratorConfig, generate_complex
from simpcent import spectral, walks
from simpcent.centrality import eigenvector_centrality


def build(n, seed):
    cfg = GeneratorConfig(model="flag", n=n, prob=0.45, seed=seed)
    return generate_complex(cfg)


def bench(c, repeat=3):
    """Best-of-repeat wall times for each hot path, in seconds."""
    out = {}

    def run(name, fn):
        best = min(_timed(fn) for _ in range(repeat))
        out[name] = best

    run("nearness graph", lambda: walks.build_nearness_graph(c))
    g = walks.build_nearness_graph(c)

    def degree_sweep():
        for q in range(c.dim + 1):
            for fam, ps in (("L", range(q + 1)), ("U", range(q, c.dim + 1))):
                for p in ps:
                    spectral.theorem_degrees(c, q, p, fam)

    run("degree sweep", degree_sweep)
    run("all-pairs BFS p=0", lambda: walks.all_pairs(g, 0))
    if c.dim >= 1:
        run("power iteration", lambda: eigenvector_centrality(c, 1, 0))
    return out


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=16, help="vertex count")
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()

    c = build(args.n, args.seed)
    print(
        f"complex: n={len(c.vertices)} dim={c.dim} "
        f"f={tuple(c.f_vector)} simplices={c.n_simplices}"
    )

    results = {}
    for backend in ("numpy", "numba"):
        try:
            kernels.set_backend(backend)
        except Exception as exc:  # numba may be unavailable
            print(f"{backend}: skipped ({exc})")
            continue
        if backend == "numba":
            t0 = time.perf_counter()
            walks.build_nearness_graph(c)  # trigger compilation
            print(f"numba warmup (compilation): {time.perf_counter() - t0:.2f}s")
        results[backend] = bench(c)

    names = sorted({k for r in results.values() for k in r})
    print(f"\n{'path':<22}" + "".join(f"{b:>12}" for b in results))
    for name in names:
        row = f"{name:<22}"
        for b in results:
            row += f"{results[b].get(name, float('nan')) * 1e3:>10.2f}ms"
        print(row)
    if {"numpy", "numba"} <= results.keys():
        print("\nspeedup (numpy / numba):")
        for name in names:
            ratio = results["numpy"][name] / max(results["numba"][name], 1e-12)
            print(f"  {name:<20} {ratio:6.1f}x")


if __name__ == "__main__":
    main()
