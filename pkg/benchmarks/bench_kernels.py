"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from rcng import _kernels_py
from rcng.constructions import lower_family_graph
from rcng.graph import Graph, _refined_cells, complement, is_connected
from rcng.solver import _Csr, search_order

try:
    from rcng import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_connected(rng, n, p):
    while True:
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if is_connected(g):
            return g


def workloads(rng):
    checks = []
    for _ in range(300):
        g = random_connected(rng, 9, 0.4)
        csr = _Csr(g)
        colors = [rng.randint(1, 3) for _ in csr.edges]
        checks.append((g.n, csr.offsets, csr.targets, csr.edge_ids, colors, 3))

    searches = []
    # C_9 and C_10 at k = 4 are infeasible, so the whole tree is explored
    hard = [(Graph.cycle(9), 4), (Graph.cycle(10), 4), (Graph.cycle(12), 6)]
    hard += [(random_connected(rng, 10, 0.3), 3) for _ in range(5)]
    # complement of the n = 13 rc-2 construction: a few thousand nodes at k = 2
    lf, _, _ = lower_family_graph(13)
    hard.append((complement(lf), 2))
    for g, k in hard:
        csr = _Csr(g)
        searches.append((g.n, csr.offsets, csr.targets, csr.edge_ids, len(csr.edges), k, search_order(g, csr)))

    canons = []
    for _ in range(300):
        g = random_connected(rng, 8, 0.5)
        canons.append((g.n, list(g.adj), _refined_cells(g)))
    return {"rainbow_feasible": checks, "search_coloring": searches, "canon_min": canons}


def bench(module, name, cases, repeat):
    fn = getattr(module, name)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in cases:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    loads = workloads(random.Random(args.seed))
    print(f"{'kernel':<18} {'cases':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, cases in loads.items():
        tp = bench(_kernels_py, name, cases, args.repeat)
        if _kernels_c is None:
            print(f"{name:<18} {len(cases):>6} {tp:>10.3f} {'n/a':>10} {'n/a':>8}")
            continue
        tc = bench(_kernels_c, name, cases, args.repeat)
        print(f"{name:<18} {len(cases):>6} {tp:>10.3f} {tc:>10.4f} {tp / tc:>7.0f}x")


if __name__ == "__main__":
    main()
