import json
import subprocess
import sys

import pytest

from rcng.cli import main
from rcng.graph import Graph, canonical_key, complement, parse_graph6, to_graph6
from rcng.solver import EdgeColoring, rc_exact


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rc_command(capsys, tmp_path):
    out_file = tmp_path / "rc.json"
    code, out, _ = run(capsys, "rc", "--graph6", to_graph6(Graph.cycle(5)), "--out", str(out_file))
    assert code == 0
    assert out.startswith("rc = 3")
    doc = json.loads(out_file.read_text())
    assert doc["value"] == 3 and doc["evidence"] == "ExhaustiveSearchAtKMinus1"
    assert "{" not in out.splitlines()[0]


def test_graph_from_file(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("C~\n")
    code, out, _ = run(capsys, "rc", "--graph6", f"@{f}")
    assert code == 0 and out.startswith("rc = 1")


def test_malformed_and_disconnected_inputs(capsys):
    code, _, err = run(capsys, "rc", "--graph6", "C!")
    assert code == 2 and "byte 1" in err
    code, _, err = run(capsys, "rc", "--graph6", to_graph6(Graph.empty(4)))
    assert code == 2 and "connected" in err
    code, _, err = run(capsys, "gamma", "--graph6", to_graph6(Graph.empty(4)))
    assert code == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["rc"])
    assert info.value.code == 2
    code, _, _ = run(capsys, "construct", "--family", "double-star")
    assert code == 2


def test_check_and_path(capsys, tmp_path):
    g = Graph.cycle(6)
    c = rc_exact(g).witness
    f = tmp_path / "c.json"
    f.write_text(c.dumps())
    code, out, _ = run(capsys, "check", "--coloring", str(f))
    assert (code, out.strip()) == (0, "true")
    code, out, _ = run(capsys, "path", "--coloring", str(f), "--u", "0", "--v", "3")
    assert code == 0
    hops = out.split()
    assert len(hops) == 3 and hops[0].startswith("0-") and hops[-1].endswith("-3")

    bad = EdgeColoring.from_list(g, 1, [1] * 6)
    f.write_text(bad.dumps())
    code, out, _ = run(capsys, "check", "--coloring", str(f))
    assert out.strip() == "false"
    code, out, _ = run(capsys, "path", "--coloring", str(f), "--u", "0", "--v", "3")
    assert out.strip() == "NONE"


def test_check_binding_error(capsys, tmp_path):
    f = tmp_path / "c.json"
    f.write_text(rc_exact(Graph.cycle(6)).witness.dumps())
    code, _, err = run(capsys, "check", "--graph6", to_graph6(Graph.cycle(5)), "--coloring", str(f))
    assert code == 2 and "different graph" in err


def test_complement_and_gamma(capsys):
    code, out, _ = run(capsys, "complement", "--graph6", "Ch")
    h = parse_graph6(out.strip())
    assert h == complement(Graph.path(4))
    assert canonical_key(h) == canonical_key(Graph.path(4))  # self-complementary
    code, out, _ = run(capsys, "gamma", "--graph6", to_graph6(Graph.cycle(6)))
    assert out.strip() == "gamma_c = 4"


def test_construct(capsys, tmp_path):
    out_file = tmp_path / "pairs.json"
    code, out, _ = run(capsys, "construct", "--family", "lower-family", "--n", "9", "--out", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["pairs"][0]["claimed_sum"] == 4
    code, out, _ = run(capsys, "construct", "--family", "double-star", "--p", "3", "--q", "4")
    assert " 9 " in out


def test_census_reports_identical_apart_from_timing(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "census", "--n", "6", "--out", str(a))
    run(capsys, "census", "--n", "6", "--threads", "2", "--out", str(b))
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    da.pop("generated"), db.pop("generated")
    assert da == db
    assert da["min_sum"] == 5 and da["max_sum"] == 8


def test_census_jsonl(capsys, tmp_path):
    f = tmp_path / "c.jsonl"
    code, out, _ = run(capsys, "census", "--n", "5", "--out", str(f))
    lines = f.read_text().splitlines()
    assert code == 0 and len(lines) == 1 + 5
    assert "header" in json.loads(lines[0])


@pytest.mark.parametrize("theorem", ["no22", "bounds", "gammac"])
def test_verify_holds(capsys, theorem):
    code, out, _ = run(capsys, "verify", "--theorem", theorem, "--n", "6")
    assert code == 0
    assert "holds: true" in out


@pytest.mark.slow
def test_verify_no22_at_eight_reports_counterexamples(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "no22", "--n", "8")
    assert code == 0
    assert "holds: false" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rcng.cli", "rc", "--graph6", "Ch"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("rc = 3")
