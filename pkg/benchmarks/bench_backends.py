#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure numpy/Python reference.

Runs each hot kernel over a realistic workload (the order-7 connected
corpus and assorted scans) under both backends and prints the speedups.
The numba backend is the default at import; KMS_BACKEND=python selects
the reference path package-wide.

Usage:  python3 benchmarks/bench_backends.py [--heavy]
"""

import argparse
import time

import numpy as np

from kms import _kernels_nb as nb
from kms import _kernels_py as py
from kms.enumeration import connected_graphs
from kms.spectra import distance_matrix


def timed(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--heavy", action="store_true", help="larger workloads (slower python side)"
    )
    args = parser.parse_args()

    corpus = connected_graphs(7)
    masks = [g.neighbor_masks() for g in corpus]
    n_eig = 300 if args.heavy else 80
    mats = [distance_matrix(g).astype(np.float64) for g in corpus[:n_eig]]
    scan_masks = masks[: (400 if args.heavy else 120)]
    canon_graphs = connected_graphs(8)[: (2000 if args.heavy else 300)]
    canon_masks = [g.neighbor_masks() for g in canon_graphs]

    dense = [g for g in corpus if g.num_edges >= 12][: (60 if args.heavy else 25)]
    bmatch_inputs = []
    for g in dense:
        edges = g.edges()
        eu = np.array([e[0] for e in edges], dtype=np.int64)
        ev = np.array([e[1] for e in edges], dtype=np.int64)
        bmatch_inputs.append((eu, ev, g.n, np.full(g.n, 4, dtype=np.int64)))

    workloads = [
        (
            f"all_pairs_distances ({len(masks)} graphs, n=7)",
            lambda k: [k.all_pairs_distances(m) for m in masks],
        ),
        (
            f"dominant_eigen ({len(mats)} matrices)",
            lambda k: [k.dominant_eigen(m, 1e-10, 10**6) for m in mats],
        ),
        (
            f"deficiency_scan ({len(scan_masks)} graphs, k=3)",
            lambda k: [k.deficiency_scan(m, 3, 1) for m in scan_masks],
        ),
        (
            f"violation_scan ({len(scan_masks)} graphs, k=3)",
            lambda k: [k.violation_scan(m, 3, 1, 1, 1, False) for m in scan_masks],
        ),
        (
            f"canonical_bits ({len(canon_masks)} graphs, n=8)",
            lambda k: [k.canonical_bits(m) for m in canon_masks],
        ),
        (
            f"bmatch_search ({len(bmatch_inputs)} dense graphs, k=4)",
            lambda k: [
                k.bmatch_search(eu, ev, n, t, 4, 10**7)
                for eu, ev, n, t in bmatch_inputs
            ],
        ),
    ]

    # warm the JIT before timing
    for _, load in workloads:
        load(nb)

    print(f"{'kernel/workload':<46} {'numba':>9} {'python':>9} {'speedup':>8}")
    for name, load in workloads:
        t_nb = timed(lambda: load(nb), repeat=3)
        t_py = timed(lambda: load(py))
        print(f"{name:<46} {t_nb:>8.3f}s {t_py:>8.3f}s {t_py / t_nb:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
