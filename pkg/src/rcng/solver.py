"""Rainbow connectivity checks and exact rainbow connection numbers."""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from . import _kernels_py, kernels
from .graph import (
    DisconnectedGraphError,
    Graph,
    diameter,
    is_complete,
    is_connected,
    is_tree,
    iter_bits,
)

MAX_KERNEL_K = 20
DEFAULT_MAX_N = 10


class ColoringBindingError(ValueError):
    """A colouring was used with a graph it does not belong to."""


class EffortLimitError(ValueError):
    """The requested exact search exceeds the default size limit."""


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colours ``1..k`` to the edges of ``graph``."""

    graph: Graph
    k: int
    colors: Mapping[tuple[int, int], int] = field(repr=False)

    def __post_init__(self):
        norm = {_edge(u, v): int(c) for (u, v), c in self.colors.items()}
        edges = set(self.graph.edges())
        if set(norm) != edges:
            missing = sorted(edges - set(norm))
            extra = sorted(set(norm) - edges)
            raise ColoringBindingError(
                f"colouring does not cover exactly the graph's edges "
                f"(missing {missing[:3]}, extra {extra[:3]})"
            )
        bad = [c for c in norm.values() if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colour {bad[0]} outside 1..{self.k}")
        object.__setattr__(self, "colors", norm)

    @classmethod
    def from_list(cls, graph: Graph, k: int, colors: list[int]) -> "EdgeColoring":
        """Colours given in ``graph.edges()`` order."""
        return cls(graph, k, dict(zip(graph.edges(), colors)))

    def color(self, u: int, v: int) -> int:
        return self.colors[_edge(u, v)]

    def used_colors(self) -> set[int]:
        return set(self.colors.values())

    def as_list(self) -> list[int]:
        return [self.colors[e] for e in self.graph.edges()]

    def to_document(self) -> dict:
        return {
            "n": self.graph.n,
            "k": self.k,
            "edges": [[u, v, c] for (u, v), c in sorted(self.colors.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document(), separators=(",", ":")) + "\n"

    @classmethod
    def from_document(cls, doc: Mapping) -> "EdgeColoring":
        n = int(doc["n"])
        triples = [tuple(int(x) for x in t) for t in doc["edges"]]
        graph = Graph.from_edges(n, [(u, v) for u, v, _ in triples])
        return cls(graph, int(doc["k"]), {(u, v): c for u, v, c in triples})

    @classmethod
    def loads(cls, text: str) -> "EdgeColoring":
        return cls.from_document(json.loads(text))


class Evidence(str, enum.Enum):
    CLIQUE_RULE = "CliqueRule"
    TREE_RULE = "TreeRule"
    DIAMETER_ONLY = "DiameterOnly"
    EXHAUSTIVE = "ExhaustiveSearchAtKMinus1"


@dataclass(frozen=True)
class RcCertificate:
    value: int
    witness: EdgeColoring
    lower_bound_evidence: Evidence
    search_nodes: int = 0

    def to_document(self) -> dict:
        return {
            "value": self.value,
            "evidence": self.lower_bound_evidence.value,
            "witness": self.witness.to_document(),
        }


class _Csr:
    """Edge-indexed CSR view of a graph, the layout the kernels consume."""

    def __init__(self, g: Graph):
        self.edges = g.edges()
        index = {e: i for i, e in enumerate(self.edges)}
        self.offsets = [0]
        self.targets = []
        self.edge_ids = []
        for v in range(g.n):
            for u in iter_bits(g.adj[v]):
                self.targets.append(u)
                self.edge_ids.append(index[_edge(u, v)])
            self.offsets.append(len(self.targets))


def _check_binding(g: Graph, c: EdgeColoring) -> None:
    if c.graph != g:
        raise ColoringBindingError("colouring is bound to a different graph")


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> bool:
    _check_binding(g, c)
    if g.n <= 1:
        return True
    if not is_connected(g):
        return False
    csr = _Csr(g)
    relabel = {col: i + 1 for i, col in enumerate(sorted(c.used_colors()))}
    colors = [relabel[c.colors[e]] for e in csr.edges]
    k = len(relabel)
    impl = kernels if k <= MAX_KERNEL_K else _kernels_py
    return impl.rainbow_feasible(g.n, csr.offsets, csr.targets, csr.edge_ids, colors, k)


def find_rainbow_path(g: Graph, c: EdgeColoring, u: int, v: int) -> list[tuple[int, int]] | None:
    """A ``u``-``v`` path with pairwise distinct colours, as an edge list."""
    _check_binding(g, c)
    if u == v:
        return []
    start = (u, 0)
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, mask = state
        for y in iter_bits(g.adj[x]):
            bit = 1 << c.color(x, y)
            if mask & bit:
                continue
            nxt = (y, mask | bit)
            if nxt in parent:
                continue
            parent[nxt] = state
            if y == v:
                return _shortcut(_unwind(parent, nxt))
            queue.append(nxt)
    return None


def _unwind(parent, state) -> list[int]:
    walk = []
    while state is not None:
        walk.append(state[0])
        state = parent[state]
    return walk[::-1]


def _shortcut(walk: list[int]) -> list[tuple[int, int]]:
    # A rainbow walk never repeats an edge; cutting out loops keeps it rainbow.
    path: list[int] = []
    pos: dict[int, int] = {}
    for x in walk:
        if x in pos:
            for y in path[pos[x] + 1 :]:
                del pos[y]
            del path[pos[x] + 1 :]
        else:
            pos[x] = len(path)
            path.append(x)
    return [(path[i], path[i + 1]) for i in range(len(path) - 1)]


def _require_connected(g: Graph) -> None:
    if g.n < 2 or not is_connected(g):
        raise DisconnectedGraphError("graph must be connected with n >= 2")


def spanning_tree_edges(g: Graph) -> list[tuple[int, int]]:
    seen = 1
    tree = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in iter_bits(g.adj[x] & ~seen):
            seen |= 1 << y
            tree.append(_edge(x, y))
            queue.append(y)
    return tree


def rc_upper_tree(g: Graph) -> EdgeColoring:
    """Distinct colours on a BFS spanning tree, colour 1 everywhere else."""
    _require_connected(g)
    colors = {e: 1 for e in g.edges()}
    for i, e in enumerate(spanning_tree_edges(g)):
        colors[e] = i + 1
    return EdgeColoring(g, g.n - 1, colors)


def search_order(g: Graph, csr: _Csr) -> list[int]:
    """Edge indices ordered so each vertex's edges into earlier vertices are adjacent.

    Vertices are taken in BFS order from a maximum-degree vertex; this closes
    short-path constraints early and lets the pruning bite.
    """
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    pos = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(iter_bits(g.adj[x]), key=lambda y: (-g.degree(y), y)):
            if y not in pos:
                pos[y] = len(pos)
                queue.append(y)
    ranked = sorted(
        range(len(csr.edges)),
        key=lambda i: (max(pos[csr.edges[i][0]], pos[csr.edges[i][1]]),
                       min(pos[csr.edges[i][0]], pos[csr.edges[i][1]])),
    )
    return ranked


def search_k_coloring(g: Graph, k: int) -> tuple[EdgeColoring | None, int]:
    """Exhaustive rainbow ``k``-colouring search; returns ``(colouring, nodes)``."""
    _require_connected(g)
    if k < 1:
        return None, 0
    if k >= g.n - 1:
        tree = rc_upper_tree(g)
        return EdgeColoring(g, k, tree.colors), 0
    if k > MAX_KERNEL_K:
        raise ValueError(f"exact search supports k <= {MAX_KERNEL_K}")
    csr = _Csr(g)
    order = search_order(g, csr)
    colors, nodes = kernels.search_coloring(
        g.n, csr.offsets, csr.targets, csr.edge_ids, len(csr.edges), k, order
    )
    if colors is None:
        return None, nodes
    return EdgeColoring(g, k, dict(zip(csr.edges, colors))), nodes


def has_rainbow_k_coloring(g: Graph, k: int) -> EdgeColoring | None:
    return search_k_coloring(g, k)[0]


def rc_exact(g: Graph, effort_override: bool = False) -> RcCertificate:
    """Exact rainbow connection number with a witness colouring."""
    _require_connected(g)
    if g.n > DEFAULT_MAX_N and not effort_override:
        raise EffortLimitError(
            f"exact rc for n={g.n} > {DEFAULT_MAX_N} needs effort_override=True"
        )
    if is_complete(g):
        return RcCertificate(1, EdgeColoring(g, 1, {e: 1 for e in g.edges()}), Evidence.CLIQUE_RULE)
    if is_tree(g):
        return RcCertificate(g.n - 1, rc_upper_tree(g), Evidence.TREE_RULE)
    start = max(diameter(g), 2)
    total = 0
    for k in range(start, g.n - 1):
        witness, nodes = search_k_coloring(g, k)
        total += nodes
        if witness is not None:
            evidence = Evidence.DIAMETER_ONLY if k == start else Evidence.EXHAUSTIVE
            return RcCertificate(k, witness, evidence, total)
    # only trees need n-1 colours, so this is reached only if the search is wrong
    raise AssertionError(f"no rainbow colouring below n-1 found for non-tree {g!r}")
