"""Extending a rainbow k-colouring to a graph with one extra vertex.

Given a rainbow ``k``-colouring of ``G`` and a new vertex ``P`` joined to a set
``X`` of at least ``n + 1 - k`` vertices, every new edge ``Px`` can be given a
colour from ``1..k`` so that ``G + P`` stays rainbow connected.

For each ``y`` outside ``X`` a rainbow path from a fixed ``x1`` in ``X`` to ``y``
is cut at its last ``X`` vertex; the remaining tails are grouped by the ``X``
vertex they start from. Each group spans at most ``k`` vertices. If the group
misses a colour, ``Px`` takes the smallest missing one. Otherwise surplus
edges are removed (a duplicate-coloured edge on a cycle is deleted, a
duplicate-coloured bridge is contracted) until exactly ``k`` edges with
distinct colours remain; one of them lies on a cycle and its colour is given
to ``Px``. The result is always re-checked.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .graph import Graph
from .solver import EdgeColoring, _edge, find_rainbow_path, is_rainbow_connected


class Lemma2PreconditionError(ValueError):
    pass


class Lemma2Anomaly(RuntimeError):
    """The extension procedure produced a colouring the checker rejects."""

    def __init__(self, message: str, graph: Graph, coloring: EdgeColoring, attach: list[int]):
        super().__init__(f"{message}: graph={graph!r} attach={attach} colors={coloring.as_list()}")
        self.graph = graph
        self.coloring = coloring
        self.attach = attach


def _tail_groups(g: Graph, c: EdgeColoring, xs: list[int]) -> dict[int, set[tuple[int, int]]]:
    in_x = set(xs)
    x1 = xs[0]
    groups: dict[int, set[tuple[int, int]]] = {x: set() for x in xs}
    for y in range(g.n):
        if y in in_x:
            continue
        path = find_rainbow_path(g, c, x1, y)
        if path is None:
            raise Lemma2PreconditionError(f"no rainbow path from {x1} to {y}")
        verts = [x1] + [b for _, b in path]
        last = max(i for i, v in enumerate(verts) if v in in_x)
        groups[verts[last]].update(_edge(a, b) for a, b in path[last:])
    return groups


def _is_bridge(edges: list[tuple], idx: int) -> bool:
    a, b = edges[idx][0], edges[idx][1]
    adj: dict[int, list[int]] = {}
    for i, (u, v, *_rest) in enumerate(edges):
        if i == idx:
            continue
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w == b:
                return False
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return True


def _contract(edges: list[tuple], idx: int) -> list[tuple]:
    a, b = edges[idx][0], edges[idx][1]
    out = []
    for i, (u, v, col, orig) in enumerate(edges):
        if i == idx:
            continue
        out.append((a if u == b else u, a if v == b else v, col, orig))
    return out


def _reductions(edges: list[tuple], k: int, seen: set) -> Iterator[list[tuple]]:
    """All multigraphs with ``k`` distinctly coloured edges reachable by the reduction."""
    sig = frozenset((min(u, v), max(u, v), orig) for u, v, _, orig in edges)
    if sig in seen:
        return
    seen.add(sig)
    if len(edges) <= k:
        yield edges
        return
    count: dict[int, int] = {}
    for _, _, col, _ in edges:
        count[col] = count.get(col, 0) + 1
    dup = sorted(
        (i for i, e in enumerate(edges) if count[e[2]] > 1), key=lambda i: (edges[i][2], edges[i][3])
    )
    on_cycle = [i for i in dup if not _is_bridge(edges, i)]
    if on_cycle:
        for i in on_cycle:
            yield from _reductions(edges[:i] + edges[i + 1 :], k, seen)
    else:
        for i in dup:
            yield from _reductions(_contract(edges, i), k, seen)


def _reaches_all_avoiding(x: int, group: Iterable[tuple[int, int]], c: EdgeColoring, banned: int) -> bool:
    """Whether every vertex of the group has a rainbow path from ``x`` inside it avoiding ``banned``."""
    adj: dict[int, list[int]] = {}
    for u, v in group:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    targets = set(adj) | {x}
    start = (x, 1 << banned)
    seen = {start}
    reached = {x}
    queue = deque([start])
    while queue and reached != targets:
        u, mask = queue.popleft()
        for w in adj.get(u, ()):
            bit = 1 << c.color(u, w)
            if mask & bit:
                continue
            state = (w, mask | bit)
            if state not in seen:
                seen.add(state)
                reached.add(w)
                queue.append(state)
    return reached == targets


def choose_edge_color(x: int, group: set[tuple[int, int]], c: EdgeColoring) -> int | None:
    """Colour for the new edge ``Px`` given the tail group starting at ``x``."""
    k = c.k
    present = {c.color(u, v) for u, v in group}
    if len(present) < k:
        return min(set(range(1, k + 1)) - present)
    edges = [(u, v, c.color(u, v), (u, v)) for u, v in sorted(group)]
    for reduced in _reductions(edges, k, set()):
        for i in range(len(reduced)):
            if _is_bridge(reduced, i):
                continue
            color = reduced[i][2]
            if _reaches_all_avoiding(x, group, c, color):
                return color
    return None


def extend_coloring_lemma2(
    g: Graph, c: EdgeColoring, attach: Iterable[int]
) -> tuple[Graph, EdgeColoring]:
    """Add vertex ``n`` joined to ``attach`` and colour its edges with colours ``1..k``."""
    xs = sorted(set(attach))
    n, k = g.n, c.k
    if c.graph != g:
        raise Lemma2PreconditionError("colouring is bound to a different graph")
    if not xs:
        raise Lemma2PreconditionError("attach set must be nonempty")
    if any(not 0 <= x < n for x in xs):
        raise Lemma2PreconditionError("attach set contains a vertex outside the graph")
    if len(xs) < n + 1 - k:
        raise Lemma2PreconditionError(f"|attach|={len(xs)} < n+1-k={n + 1 - k}")
    if not is_rainbow_connected(g, c):
        raise Lemma2PreconditionError("input colouring is not rainbow connecting")

    groups = _tail_groups(g, c, xs)
    g_prime = g.add_vertex(xs)
    colors = dict(c.colors)
    for x in xs:
        color = choose_edge_color(x, groups[x], c)
        if color is None:
            stub = EdgeColoring(g, k, c.colors)
            raise Lemma2Anomaly(f"no admissible colour for edge {x}-{n}", g, stub, xs)
        colors[(x, n)] = color
    c_prime = EdgeColoring(g_prime, k, colors)
    if not is_rainbow_connected(g_prime, c_prime):
        raise Lemma2Anomaly("extended colouring is not rainbow connecting", g_prime, c_prime, xs)
    return g_prime, c_prime
