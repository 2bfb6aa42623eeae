"""Extremal graph families with explicit rainbow colourings.

``double_star`` gives complementary pairs with ``rc(G) + rc(G') = n + 2`` and
``lower_family`` gives pairs with ``rc(G) = rc(G') = 2`` for every ``n >= 8``.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph, complement, is_connected, to_graph6
from .solver import EdgeColoring, has_rainbow_k_coloring, is_rainbow_connected, rc_upper_tree

FIXTURE_ENV = "RCNG_FIXTURE_DIR"


class ConstructionError(RuntimeError):
    """A generated pair or one of its stated colourings failed validation."""


class _Deferred:
    def __repr__(self):
        return "DEFERRED"


DEFERRED = _Deferred()


@dataclass(frozen=True)
class ConstructedPair:
    family: str
    params: dict
    g: Graph
    g_bar: Graph
    coloring_g: EdgeColoring | _Deferred
    coloring_gbar: EdgeColoring | _Deferred
    claimed_rc_g: int
    claimed_rc_gbar: int
    notes: dict = field(default_factory=dict)

    @property
    def claimed_sum(self) -> int:
        return self.claimed_rc_g + self.claimed_rc_gbar

    def to_document(self) -> dict:
        def doc(c):
            return None if c is DEFERRED else c.to_document()

        return {
            "family": self.family,
            "params": self.params,
            "n": self.g.n,
            "g": to_graph6(self.g),
            "g_bar": to_graph6(self.g_bar),
            "coloring_g": doc(self.coloring_g),
            "coloring_gbar": doc(self.coloring_gbar),
            "claimed_rc_g": self.claimed_rc_g,
            "claimed_rc_gbar": self.claimed_rc_gbar,
            "claimed_sum": self.claimed_sum,
        }


def _fill(pair: ConstructedPair) -> ConstructedPair:
    """Replace deferred colourings with solver colourings, then validate."""
    cg, cb = pair.coloring_g, pair.coloring_gbar
    if cg is DEFERRED:
        cg = has_rainbow_k_coloring(pair.g, pair.claimed_rc_g)
    if cb is DEFERRED:
        cb = has_rainbow_k_coloring(pair.g_bar, pair.claimed_rc_gbar)
    if cg is None or cb is None:
        raise ConstructionError(f"{pair.family} {pair.params}: claimed colouring does not exist")
    filled = ConstructedPair(
        pair.family, pair.params, pair.g, pair.g_bar, cg, cb,
        pair.claimed_rc_g, pair.claimed_rc_gbar, pair.notes,
    )
    validate_pair(filled)
    return filled


def validate_pair(pair: ConstructedPair) -> None:
    if pair.g_bar != complement(pair.g):
        raise ConstructionError(f"{pair.family} {pair.params}: g_bar is not the complement of g")
    if not (is_connected(pair.g) and is_connected(pair.g_bar)):
        raise ConstructionError(f"{pair.family} {pair.params}: pair is not complementary connected")
    for side, graph, col, claim in (
        ("g", pair.g, pair.coloring_g, pair.claimed_rc_g),
        ("g_bar", pair.g_bar, pair.coloring_gbar, pair.claimed_rc_gbar),
    ):
        if col is DEFERRED:
            continue
        if col.k != claim or len(col.used_colors()) != claim:
            raise ConstructionError(
                f"{pair.family} {pair.params}: {side} colouring uses "
                f"{len(col.used_colors())} colours, claimed {claim}"
            )
        if not is_rainbow_connected(graph, col):
            raise ConstructionError(
                f"{pair.family} {pair.params}: stated {side} colouring is not rainbow "
                f"connecting; graph6={to_graph6(graph)} colors={col.to_document()['edges']}"
            )


def double_star(p: int, q: int) -> ConstructedPair:
    """Centres of stars on ``p`` and ``q`` vertices joined by an edge.

    Labels: centre ``u = 0`` with leaves ``1..p-1``, centre ``v = p`` with
    leaves ``p+1..n-1``.
    """
    if p < 2 or q < 2:
        raise ValueError("double_star needs p >= 2 and q >= 2")
    n = p + q
    u, v = 0, p
    leaves_u = list(range(1, p))
    leaves_v = list(range(p + 1, n))
    g = Graph.from_edges(n, [(u, x) for x in leaves_u] + [(u, v)] + [(v, y) for y in leaves_v])
    g_bar = complement(g)
    side_x = set(leaves_u) | {v}
    colors = {}
    for a, b in g_bar.edges():
        if a in side_x and b in side_x:
            colors[(a, b)] = 1
        elif a not in side_x and b not in side_x:
            colors[(a, b)] = 2
        else:
            colors[(a, b)] = 3
    pair = ConstructedPair(
        "DoubleStar", {"p": p, "q": q}, g, g_bar,
        rc_upper_tree(g), EdgeColoring(g_bar, 3, colors), n - 1, 3,
    )
    validate_pair(pair)
    return pair


def lower_family_graph(n: int, window: int | None = None) -> tuple[Graph, EdgeColoring, dict]:
    """The ``rc = 2`` construction on ``n >= 8`` vertices with its 2-colouring.

    Labels: ``v = 0``, then ``x_1, x_2, ...``, then ``y_1, y_2, ...``. Each
    ``x_i`` sees the ``window`` consecutive vertices ``y_i, y_{i+1}, ...``
    (indices wrap, residue 0 maps to the largest index). The default window
    is ``k = n // 4``, the length of the explicit ``x_{2k}`` neighbourhood in
    the ``4k+1`` case; with ``k + 1`` the complement has no rainbow
    2-colouring (checked exhaustively for 8 <= n <= 13).
    """
    if n < 8:
        raise ValueError("lower_family needs n >= 8")
    k, r = divmod(n, 4)
    nx = {0: 2 * k - 1, 1: 2 * k, 2: 2 * k, 3: 2 * k + 1}[r]
    ny = 2 * k if r <= 1 else 2 * k + 1
    assert 1 + nx + ny == n

    def x(i):
        return i

    def y(j):
        return nx + j

    def wrap(j):
        return (j - 1) % ny + 1

    edges = set()
    red = set()

    def join(a, b, color=1):
        e = (min(a, b), max(a, b))
        edges.add(e)
        if color == 2:
            red.add(e)

    for i in range(1, nx + 1):
        join(0, x(i))
    for j1 in range(1, ny + 1):
        for j2 in range(j1 + 1, ny + 1):
            join(y(j1), y(j2))
    general = range(1, nx + 1) if r != 1 else range(1, 2 * k)
    for i in general:
        for step in range(k if window is None else window):
            join(x(i), y(wrap(i + step)))
    if r in (1, 3):
        # explicit neighbourhood of x_{2k} from the 4k+1 case, kept for 4k+3
        for j in [2 * k] + list(range(1, k)):
            join(x(2 * k), y(j))
    if r == 3:
        join(x(k + 1), y(2 * k + 1))

    for i in range(k + 1, 2 * k):
        join(0, x(i), 2)
    for i in range(1, 2 * k):
        join(x(i), y(i), 2)
    join(x(k), y(k + 1), 2)
    if r >= 1:
        join(0, x(2 * k), 2)
        join(x(2 * k), y(2 * k), 2)
    if r == 3:
        join(0, x(2 * k + 1), 2)
        join(x(2 * k + 1), y(2 * k + 1), 2)

    g = Graph.from_edges(n, sorted(edges))
    coloring = EdgeColoring(g, 2, {e: (2 if e in red else 1) for e in edges})
    labels = {"v": [0], "X": [x(i) for i in range(1, nx + 1)], "Y": [y(j) for j in range(1, ny + 1)]}
    return g, coloring, labels


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return Path(__file__).with_name("fixtures")


def _cached_complement_coloring(n: int, g_bar: Graph) -> EdgeColoring | None:
    path = fixture_dir() / "lower_family" / f"gbar_{n}.json"
    try:
        cached = EdgeColoring.loads(path.read_text())
    except (OSError, ValueError, KeyError, TypeError):
        return None
    if cached.graph != g_bar or cached.k != 2 or not is_rainbow_connected(g_bar, cached):
        return None
    return cached


def _store_complement_coloring(n: int, coloring: EdgeColoring) -> None:
    directory = fixture_dir() / "lower_family"
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(coloring.dumps())
        os.replace(tmp, directory / f"gbar_{n}.json")
    except OSError:
        pass


def lower_family(n: int, use_cache: bool = True) -> ConstructedPair:
    g, coloring_g, labels = lower_family_graph(n)
    g_bar = complement(g)
    cb = _cached_complement_coloring(n, g_bar) if use_cache else None
    pair = ConstructedPair(
        "LowerFamily", {"n": n}, g, g_bar, coloring_g, cb if cb is not None else DEFERRED,
        2, 2, {"labels": labels},
    )
    validate_pair(pair)
    filled = _fill(pair)
    if cb is None and use_cache:
        _store_complement_coloring(n, filled.coloring_gbar)
    return filled


def path_pair4() -> ConstructedPair:
    pair = double_star(2, 2)
    return ConstructedPair("PathPair4", {}, pair.g, pair.g_bar, pair.coloring_g,
                           DEFERRED, 3, 3)


def tree_pair5() -> ConstructedPair:
    """Star on 4 vertices (centre 0) with a pendant edge hung on leaf 1."""
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
    return ConstructedPair("TreePair5", {}, g, complement(g), rc_upper_tree(g), DEFERRED, 4, 3)


def cycle_pair6() -> ConstructedPair:
    """C_6 on ``v_1..v_6`` (labels 0..5) with the stated complement 2-colouring."""
    g = Graph.cycle(6)
    g_bar = complement(g)
    heavy = {(0, 2), (1, 3), (2, 4)}
    cb = EdgeColoring(g_bar, 2, {e: (2 if e in heavy else 1) for e in g_bar.edges()})
    return ConstructedPair("CyclePair6", {}, g, g_bar, DEFERRED, cb, 3, 2)


def min_sum_pair(n: int) -> ConstructedPair:
    """Minimum-sum complementary pair on ``n`` vertices located by the census."""
    from .census import ng_census

    report = ng_census(n)
    rec = report.min_record
    g = report.graph_of(rec)
    return ConstructedPair(f"CensusMin{n}", {"n": n}, g, complement(g), DEFERRED, DEFERRED,
                           rec.rc_g, rec.rc_gbar)


def small_case_pairs() -> list[ConstructedPair]:
    pairs = [path_pair4(), tree_pair5(), cycle_pair6(), min_sum_pair(7)]
    return [_fill(p) for p in pairs]


def bundle_json(pairs: list[ConstructedPair]) -> str:
    return json.dumps({"pairs": [p.to_document() for p in pairs]}, indent=1, sort_keys=True) + "\n"
