import itertools
import json

import networkx as nx
import pytest

from rcng.census import (
    CensusReport,
    bound_violations,
    enumerate_both_connected,
    gamma_c_violations,
    graph_classes,
    ng_census,
    prop1_filter,
    verify_no_2_2,
)
from rcng.graph import Graph, complement, parse_graph6, to_graph6
from rcng.solver import EdgeColoring, has_rainbow_k_coloring, is_rainbow_connected, rc_exact

from oracles import atlas, both_connected_pair_count, from_nx, naive_rc


def brute_classes(n):
    """Isomorphism classes by minimising the edge bitmask over all permutations."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [e for i, e in enumerate(pairs) if bits >> i & 1]
        best = min(
            sum(1 << pairs.index(tuple(sorted((p[u], p[v])))) for u, v in edges) for p in perms
        )
        seen.add(best)
    return len(seen)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_counts_brute_force(n):
    assert len(graph_classes(n)) == brute_classes(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_class_counts_known(n):
    assert len(graph_classes(n)) == [1, 2, 4, 11, 34, 156, 1044, 12346][n - 1]


@pytest.mark.parametrize("n", range(4, 8))
def test_both_connected_pairs_match_atlas(n):
    reps = list(enumerate_both_connected(n))
    assert len(reps) == both_connected_pair_count(n)


def reference_sums(n):
    sums = []
    for h in atlas(n):
        hb = nx.complement(h)
        if nx.is_connected(h) and nx.is_connected(hb):
            sums.append(naive_rc(from_nx(h)) + naive_rc(from_nx(hb)))
    return sums


@pytest.mark.parametrize("n, lo, hi", [(4, 6, 6), (5, 6, 7), (6, 5, 8)])
def test_census_extremes_against_oracle(n, lo, hi):
    report = ng_census(n)
    sums = reference_sums(n)
    assert (report.min_sum, report.max_sum) == (min(sums), max(sums)) == (lo, hi)
    assert report.class_count == both_connected_pair_count(n)
    assert not bound_violations(report)


@pytest.mark.slow
def test_census_seven_against_oracle():
    report = ng_census(7)
    sums = reference_sums(7)
    assert (report.min_sum, report.max_sum) == (min(sums), max(sums)) == (5, 9)


def test_records_are_exact():
    report = ng_census(6)
    for r in report.records:
        g = parse_graph6(r.graph6_g)
        assert to_graph6(complement(g)) == r.graph6_gbar
        assert rc_exact(g).value == r.rc_g
        assert rc_exact(complement(g)).value == r.rc_gbar
        assert r.sum == r.rc_g + r.rc_gbar


def test_witness_colorings_check():
    report = ng_census(6)
    for tag, rec in (("min", report.min_record), ("max", report.max_record)):
        docs = report.witness_colorings[tag]
        g = parse_graph6(rec.graph6_g)
        for side, graph, rc in (("g", g, rec.rc_g), ("g_bar", complement(g), rec.rc_gbar)):
            c = EdgeColoring.from_document(docs[side])
            assert c.graph == graph and c.k == rc
            assert is_rainbow_connected(graph, c)


def test_report_roundtrip_and_determinism(tmp_path):
    a = ng_census(6)
    b = ng_census(6, threads=2)
    strip = lambda r: {k: v for k, v in r.to_document().items() if k != "generated"}
    assert strip(a) == strip(b)
    assert strip(CensusReport.loads(a.dumps())) == strip(a)
    assert strip(CensusReport.loads(a.dumps_lines())) == strip(a)
    first = json.loads(a.dumps_lines().splitlines()[0])
    assert first["header"]["n"] == 6


def test_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.json"
    a = ng_census(6, checkpoint=ck)
    assert ck.exists()
    b = ng_census(6, checkpoint=ck)
    assert [r.sum for r in a.records] == [r.sum for r in b.records]


def test_range_limits():
    with pytest.raises(ValueError):
        ng_census(3)
    with pytest.raises(ValueError):
        ng_census(9)
    with pytest.raises(ValueError):
        ng_census(8)  # needs the override


def test_prop1_is_sound_on_small_graphs():
    # anything with rc 2 on both sides must pass the filter
    for n in range(4, 8):
        for g in enumerate_both_connected(n):
            if prop1_filter(g).passes:
                continue
            both = has_rainbow_k_coloring(g, 2) and has_rainbow_k_coloring(complement(g), 2)
            assert not both


def test_prop1_components():
    v = prop1_filter(Graph.cycle(5))
    assert v.diam_ok and v.degree_ok and v.passes
    v = prop1_filter(Graph.path(4))
    assert not v.diam_ok and not v.passes


@pytest.mark.parametrize("n", range(4, 8))
def test_no_two_two_small(n):
    report = verify_no_2_2(n)
    assert report.holds and not report.counterexamples


@pytest.mark.slow
def test_no_two_two_fails_at_eight():
    report = verify_no_2_2(8)
    assert not report.holds
    for g6 in report.counterexamples:
        g = parse_graph6(g6)
        assert rc_exact(g).value == 2 and rc_exact(complement(g)).value == 2


@pytest.mark.parametrize("n", range(4, 8))
def test_gamma_c_relation(n):
    checked, bad = gamma_c_violations(ng_census(n))
    assert not bad
    if n >= 5:
        assert checked > 0
