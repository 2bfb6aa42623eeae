"""Immutable simple graphs stored as per-vertex adjacency bitmasks."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import kernels

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62


class GraphFormatError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DisconnectedGraphError(ValueError):
    """Raised where an operation requires a connected graph."""


class Infinite:
    """Distance value of a disconnected graph; compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("rcng.Infinite")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITE = Infinite()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``. Instances are
    immutable and hashable.
    """

    __slots__ = ("n", "adj", "m", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency length must equal n")
        full = (1 << n) - 1
        adj = tuple(int(a) for a in adj)
        for v, a in enumerate(adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, a in enumerate(adj):
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", sum(a.bit_count() for a in adj) // 2)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            mask = 0
            for u in iter_bits(self.adj[v]):
                mask |= 1 << perm[u]
            adj[perm[v]] = mask
        return Graph(self.n, adj)

    def add_vertex(self, neighbours: Iterable[int]) -> "Graph":
        """Copy of the graph with a new vertex ``n`` joined to ``neighbours``."""
        new = self.n
        nb = 0
        adj = list(self.adj)
        for u in neighbours:
            if not 0 <= u < self.n:
                raise ValueError(f"vertex {u} out of range")
            nb |= 1 << u
            adj[u] |= 1 << new
        adj.append(nb)
        return Graph(self.n + 1, adj)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        )


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def _reach(g: Graph, source: int) -> int:
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity is undefined for the null graph")
    return _reach(g, 0) == (1 << g.n) - 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def distance_layers(g: Graph, v: int) -> list[int]:
    """Bitmasks of vertices at distance 0, 1, 2, ... from ``v``."""
    layers = [1 << v]
    seen = 1 << v
    while True:
        nxt = 0
        for u in iter_bits(layers[-1]):
            nxt |= g.adj[u]
        nxt &= ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt


def eccentricity(g: Graph, v: int):
    layers = distance_layers(g, v)
    if sum(layer.bit_count() for layer in layers) < g.n:
        return INFINITE
    return len(layers) - 1


def diameter(g: Graph):
    """Largest pairwise distance, or ``INFINITE`` when disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        e = eccentricity(g, v)
        if e is INFINITE:
            return INFINITE
        best = max(best, e)
    return best


def distance(g: Graph, u: int, v: int):
    for d, layer in enumerate(distance_layers(g, u)):
        if layer >> v & 1:
            return d
    return INFINITE


def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    if g.n < 1:
        raise ValueError("degree profile needs at least one vertex")
    seq = sorted((a.bit_count() for a in g.adj), reverse=True)
    return seq[-1], seq[0], seq


def neighborhoods(g: Graph, v: int) -> tuple[set[int], set[int]]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    layers = distance_layers(g, v) + [0, 0]
    return set(iter_bits(layers[1])), set(iter_bits(layers[2]))


def _induces_connected(g: Graph, subset: int) -> bool:
    start = subset & -subset
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & subset & ~seen
        seen |= frontier
    return seen == subset


def minimum_connected_dominating_set(g: Graph) -> list[int]:
    """Smallest connected dominating vertex set, searched by increasing size."""
    if g.n < 2 or not is_connected(g):
        raise DisconnectedGraphError("gamma_c undefined: graph must be connected with n >= 2")
    full = (1 << g.n) - 1
    closed = [a | (1 << v) for v, a in enumerate(g.adj)]
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            dominated = 0
            subset = 0
            for v in combo:
                dominated |= closed[v]
                subset |= 1 << v
            if dominated == full and _induces_connected(g, subset):
                return list(combo)
    raise AssertionError("unreachable: V(G) itself is a connected dominating set")


def connected_domination_number(g: Graph) -> int:
    return len(minimum_connected_dominating_set(g))


# graph6


def _n_prefix(n: int) -> str:
    if n > MAX_GRAPH6_N:
        raise ValueError(f"graph6 support is limited to n <= {MAX_GRAPH6_N}")
    return chr(n + 63)


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = [_n_prefix(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = len(text) - len(text.lstrip())
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
        base += len(GRAPH6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", base + i)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_N:
        raise GraphFormatError(f"only n <= {MAX_GRAPH6_N} is supported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        offset = base + min(len(s), 1 + need)
        raise GraphFormatError(f"expected {need} data bytes for n={n}, got {len(s) - 1}", offset)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    if nbits % 6:
        last = ord(s[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise GraphFormatError("nonzero padding bits", base + len(s) - 1)
    return Graph(n, adj)


# canonical form


def _refined_cells(g: Graph) -> list[list[int]]:
    """Ordered vertex cells from degree-seeded colour refinement.

    Cell order depends only on isomorphism-invariant signatures, so any
    isomorphism maps cells onto cells of the same index.
    """
    colour = [a.bit_count() for a in g.adj]
    ncls = len(set(colour))
    while True:
        sigs = [
            (colour[v], tuple(sorted(colour[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs), reverse=True))}
        colour = [ranks[s] for s in sigs]
        if len(ranks) == ncls:
            break
        ncls = len(ranks)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, list[int]]:
    """Minimal upper-triangle code and the relabeling that realises it.

    The code reads the upper triangle in graph6 (column-major) order with the
    first pair as the most significant bit. Returns ``(code, order)`` where
    ``order[i]`` is the old vertex placed at position ``i``.
    """
    if g.n <= 1:
        return 0, list(range(g.n))
    cells = _refined_cells(g)
    code, order = kernels.canon_min(g.n, list(g.adj), cells)
    return code, list(order)


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-class key ``(n, code)``; exact, intended for n <= 8."""
    return (g.n, canonical_form(g)[0])


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_form(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def graph_from_key(key: tuple[int, int]) -> Graph:
    n, code = key
    nbits = n * (n - 1) // 2
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if code >> (nbits - 1 - idx) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, adj)
