"""End-to-end acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line with its runtime; the lines are repeated in
the pytest terminal summary.
"""

import math
import random

import networkx as nx

from rcng.census import (
    bound_violations,
    gamma_c_violations,
    graph_classes,
    ng_census,
    verify_no_2_2,
)
from rcng.constructions import double_star, lower_family
from rcng.graph import Graph, canonical_key, complement, parse_graph6, to_graph6
from rcng.lemma2 import extend_coloring_lemma2
from rcng.solver import EdgeColoring, is_rainbow_connected, rc_exact

from conftest import random_connected, record_criterion
from oracles import atlas, from_nx, naive_rc


_CENSUS = {}


def census(n):
    if n not in _CENSUS:
        _CENSUS[n] = ng_census(n)
    return _CENSUS[n]


def test_criterion_1_unit_values():
    def check():
        assert rc_exact(Graph.path(4)).value == 3
        assert rc_exact(Graph.cycle(5)).value == 3
        assert rc_exact(Graph.cycle(6)).value == 3
        for n in range(3, 7):
            assert rc_exact(Graph.complete(n)).value == 1
        for n in range(2, 8):
            for t in nx.nonisomorphic_trees(n):
                assert rc_exact(from_nx(t)).value == n - 1
        for k in range(4, 11):
            assert rc_exact(Graph.cycle(k)).value == math.ceil(k / 2)

    record_criterion(1, "unit rc values", 10, check)


def test_criterion_2_oracle_equivalence():
    def check():
        count = 0
        for n in range(2, 6):
            for h in atlas(n):
                if nx.is_connected(h):
                    g = from_nx(h)
                    assert rc_exact(g).value == naive_rc(g), to_graph6(g)
                    count += 1
        assert count == 1 + 2 + 6 + 21

    record_criterion(2, "rc_exact equals the all-colourings oracle for n <= 5", 300, check)


def test_criterion_3_upper_sharpness():
    def check():
        for n in range(4, 13):
            for p in range(2, n - 1):
                pair = double_star(p, n - p)
                assert is_rainbow_connected(pair.g_bar, pair.coloring_gbar)
                rg = rc_exact(pair.g, effort_override=True).value
                rb = rc_exact(pair.g_bar, effort_override=True).value
                assert (rg, rb) == (n - 1, 3)
                assert rg + rb == n + 2

    record_criterion(3, "double star pairs reach n + 2 for n = 4..12", 60, check)


def test_criterion_4_lower_sharpness():
    def check():
        for n in range(8, 17):
            pair = lower_family(n, use_cache=False)
            assert pair.coloring_g.k == 2 and is_rainbow_connected(pair.g, pair.coloring_g)
            assert pair.coloring_gbar.k == 2 and is_rainbow_connected(pair.g_bar, pair.coloring_gbar)
            if n <= 12:
                assert rc_exact(pair.g, effort_override=True).value == 2
                assert rc_exact(pair.g_bar, effort_override=True).value == 2

    record_criterion(4, "lower family pairs reach 4 for n = 8..16", 900, check)


def test_criterion_5_no_two_two():
    def check():
        for n in range(4, 8):
            assert verify_no_2_2(n).holds, n
        report = verify_no_2_2(8)
        assert not report.holds and report.counterexamples
        g = parse_graph6(report.counterexamples[0])
        assert rc_exact(g).value == 2 and rc_exact(complement(g)).value == 2

    record_criterion(5, "no rc pair (2, 2) for n = 4..7, one exists at n = 8", 1800, check)


def test_criterion_6_census_bounds():
    def check():
        expected = {4: (6, 6), 5: (6, 7), 6: (5, 8), 7: (5, 9)}
        for n, (lo, hi) in expected.items():
            report = census(n)
            assert (report.min_sum, report.max_sum) == (lo, hi), n
            assert not bound_violations(report)

    record_criterion(6, "census extremes and bounds for n = 4..7", 300, check)


def test_criterion_7_extension_property():
    def check():
        rng = random.Random(2024)
        done = 0
        while done < 250:
            n = rng.randint(3, 8)
            g = random_connected(rng, n, rng.choice([0.3, 0.5, 0.7]))
            witness = rc_exact(g).witness
            k = rng.randint(witness.k, n - 1)
            c = EdgeColoring(g, k, witness.colors)
            attach = rng.sample(range(n), rng.randint(max(1, n + 1 - k), n))
            g2, c2 = extend_coloring_lemma2(g, c, attach)
            assert c2.used_colors() <= set(range(1, k + 1))
            assert is_rainbow_connected(g2, c2)
            done += 1

    record_criterion(7, "one-vertex extension keeps k colours on 250 instances", 300, check)


def test_criterion_8_gamma_c():
    def check():
        total = 0
        for n in range(4, 8):
            checked, bad = gamma_c_violations(census(n))
            assert not bad, bad[:3]
            total += checked
        assert total > 0

    record_criterion(8, "rc <= gamma_c + 2 on census graphs with min degree >= 2", 300, check)


def test_criterion_9_graph6_and_keys():
    def check():
        for n in range(1, 9):
            for g in graph_classes(n):
                assert parse_graph6(to_graph6(g)) == g
        for report in map(census, range(4, 8)):
            for r in report.records:
                assert to_graph6(parse_graph6(r.graph6_g)) == r.graph6_g
                assert to_graph6(parse_graph6(r.graph6_gbar)) == r.graph6_gbar
        rng = random.Random(99)
        for _ in range(100):
            n = rng.randint(2, 8)
            g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_key(g.relabel(perm)) == canonical_key(g)

    record_criterion(9, "graph6 round trip and canonical key invariance", 60, check)
