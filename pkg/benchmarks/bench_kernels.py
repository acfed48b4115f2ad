#!/usr/bin/env python3
"""Compare the compiled and pure-Python MWIS kernels.

Run after an editable install:

    python3 benchmarks/bench_kernels.py
"""

import time

from sparing import _backend, _kernels_py
from sparing.graphs import build_family, complete_spec, corona, cycle_spec, path_spec

CASES = [
    ("cycle:5 . cycle:4  (brute, 2^25)", cycle_spec(5), cycle_spec(4), "brute"),
    ("cycle:6 . cycle:6  (bb, 42 vertices)", cycle_spec(6), cycle_spec(6), "bb"),
    ("cycle:7 . cycle:7  (bb, 56 vertices)", cycle_spec(7), cycle_spec(7), "bb"),
    ("path:5 . complete:5  (bb, 36 vertices)", path_spec(5), complete_spec(5), "bb"),
]


def run(kernels, adj, deg, mode):
    start = time.perf_counter()
    if mode == "brute":
        best_w, _, explored = kernels.mwis_brute(adj, deg)
    else:
        best_w, _, explored, _ = kernels.mwis_bb(adj, deg)
    return best_w, explored, time.perf_counter() - start


def main():
    if not _backend.HAVE_COMPILED:
        print("compiled kernels not available; benchmarking pure Python only")
    for name, s1, s2, mode in CASES:
        g = corona(build_family(s1), build_family(s2)).graph
        adj, deg = g.adjacency_masks(), g.degrees()
        w_py, nodes_py, t_py = run(_kernels_py, adj, deg, mode)
        line = f"{name:42s} value={g.edge_count - w_py:3d} nodes={nodes_py:>10d}"
        line += f"  python={t_py * 1e3:9.1f}ms"
        if _backend.HAVE_COMPILED:
            from sparing import _ckernels

            w_c, nodes_c, t_c = run(_ckernels, adj, deg, mode)
            assert (w_c, nodes_c) == (w_py, nodes_py), "backend mismatch"
            line += f"  compiled={t_c * 1e3:8.1f}ms  speedup={t_py / t_c:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
