"""Slow, independent reference implementations used only by the tests."""

import itertools

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def simple_paths_by_pair(n, edges):
    """Every simple path between every unordered pair, as edge-index lists."""
    adj = {v: [] for v in range(n)}
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    out = {}
    for s in range(n):
        stack = [(s, {s}, [])]
        while stack:
            x, seen, used = stack.pop()
            if x > s:
                out.setdefault((s, x), []).append(used)
            for y, e in adj[x]:
                if y not in seen:
                    stack.append((y, seen | {y}, used + [e]))
    return out


def rainbow_by_paths(n, edges, colors, paths=None):
    """Rainbow connectivity by explicit simple-path enumeration."""
    if paths is None:
        paths = simple_paths_by_pair(n, edges)
    for s, t in itertools.combinations(range(n), 2):
        if not any(len({colors[e] for e in p}) == len(p) for p in paths.get((s, t), [])):
            return False
    return True


def naive_rc(g):
    """Smallest k for which some k-colouring is rainbow connecting.

    Tries every colouring with colours 0..k-1; the first edge is pinned to
    colour 0, which loses nothing since colours can be permuted.
    """
    edges = g.edges()
    paths = simple_paths_by_pair(g.n, edges)
    for k in range(1, len(edges) + 1):
        for rest in itertools.product(range(k), repeat=len(edges) - 1):
            colors = (0,) + rest
            if rainbow_by_paths(g.n, edges, colors, paths):
                return k
    raise AssertionError("edgeless or disconnected graph")


def brute_gamma_c(g):
    h = to_nx(g)
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            if nx.is_dominating_set(h, subset) and nx.is_connected(h.subgraph(subset)):
                return size
    raise AssertionError("disconnected graph")


def atlas(n):
    """All isomorphism classes on n vertices (networkx atlas covers n <= 7)."""
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


def from_nx(h):
    from rcng.graph import Graph

    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges()])


def both_connected_pair_count(n):
    """Unordered pairs {G, complement} with both sides connected."""
    both = 0
    selfc = 0
    for h in atlas(n):
        hb = nx.complement(h)
        if nx.is_connected(h) and nx.is_connected(hb):
            both += 1
            if nx.is_isomorphic(h, hb):
                selfc += 1
    return (both + selfc) // 2
