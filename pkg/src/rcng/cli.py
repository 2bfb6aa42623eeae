"""Command-line front end.

Human-readable output goes to stdout; ``--out`` receives the machine-readable
JSON report. Exit status: 0 success, 1 a verified statement does not hold,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import kernels
from .census import (
    CensusReport,
    bound_violations,
    gamma_c_violations,
    ng_census,
    verify_no_2_2,
)
from .constructions import bundle_json, double_star, lower_family, small_case_pairs
from .graph import (
    DisconnectedGraphError,
    GraphFormatError,
    complement,
    connected_domination_number,
    parse_graph6,
    to_graph6,
)
from .solver import (
    ColoringBindingError,
    EdgeColoring,
    EffortLimitError,
    find_rainbow_path,
    is_rainbow_connected,
    rc_exact,
)

# smallest possible sums for n = 4..7; n >= 8 reaches 4
SMALL_N_MIN_SUM = {4: 6, 5: 6, 6: 5, 7: 5}


class UsageError(Exception):
    pass


def _read_graph(text: str):
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            text = path.read_text().splitlines()[0]
        except (OSError, IndexError) as exc:
            raise UsageError(f"cannot read graph from {path}: {exc}") from exc
    return parse_graph6(text)


def _read_coloring(path: str) -> EdgeColoring:
    try:
        return EdgeColoring.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read colouring {path}: {exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed colouring document {path}: {exc}") from exc


def _write_out(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def cmd_rc(args) -> int:
    g = _read_graph(args.graph6)
    cert = rc_exact(g, effort_override=args.effort_override)
    print(f"rc = {cert.value}")
    print(f"evidence: {cert.lower_bound_evidence.value}")
    print(cert.witness.dumps(), end="")
    _write_out(args, _dump(cert.to_document()))
    return 0


def cmd_check(args) -> int:
    c = _read_coloring(args.coloring)
    g = _read_graph(args.graph6) if args.graph6 else c.graph
    ok = is_rainbow_connected(g, c)
    print("true" if ok else "false")
    _write_out(args, _dump({"rainbow_connected": ok}))
    return 0


def cmd_path(args) -> int:
    c = _read_coloring(args.coloring)
    g = _read_graph(args.graph6) if args.graph6 else c.graph
    for x in (args.u, args.v):
        if not 0 <= x < g.n:
            raise UsageError(f"vertex {x} out of range for n={g.n}")
    path = find_rainbow_path(g, c, args.u, args.v)
    if path is None:
        print("NONE")
    else:
        print(" ".join(f"{a}-{b}" for a, b in path) if path else "(empty path)")
    _write_out(args, _dump({"path": path}))
    return 0


def cmd_complement(args) -> int:
    g6 = to_graph6(complement(_read_graph(args.graph6)))
    print(g6)
    _write_out(args, g6 + "\n")
    return 0


def cmd_gamma(args) -> int:
    value = connected_domination_number(_read_graph(args.graph6))
    print(f"gamma_c = {value}")
    _write_out(args, _dump({"gamma_c": value}))
    return 0


def cmd_construct(args) -> int:
    if args.family == "double-star":
        if args.p is None or args.q is None:
            raise UsageError("double-star needs --p and --q")
        pairs = [double_star(args.p, args.q)]
    elif args.family == "lower-family":
        if args.n is None:
            raise UsageError("lower-family needs --n")
        pairs = [lower_family(args.n)]
    else:
        pairs = small_case_pairs()
    print(f"{'family':<14} {'n':>3} {'rc(G)':>6} {'rc(Gbar)':>9} {'sum':>4}  graph6")
    for p in pairs:
        print(f"{p.family:<14} {p.g.n:>3} {p.claimed_rc_g:>6} {p.claimed_rc_gbar:>9} "
              f"{p.claimed_sum:>4}  {to_graph6(p.g)}")
    _write_out(args, bundle_json(pairs))
    return 0


def _census(args) -> CensusReport:
    return ng_census(
        args.n,
        threads=args.threads,
        effort_override=args.effort_override,
        checkpoint=Path(args.checkpoint) if getattr(args, "checkpoint", None) else None,
    )


def cmd_census(args) -> int:
    report = _census(args)
    print(f"n={report.n} classes={report.class_count} "
          f"min_sum={report.min_sum} ({report.min_witness}) "
          f"max_sum={report.max_sum} ({report.max_witness})")
    print(f"{'graph6':<12} {'rc(G)':>6} {'rc(Gbar)':>9} {'sum':>4}  degrees")
    for r in report.records:
        print(f"{r.graph6_g:<12} {r.rc_g:>6} {r.rc_gbar:>9} {r.sum:>4}  {r.degree_sequence}")
    if args.out:
        text = report.dumps_lines() if args.out.endswith(".jsonl") else report.dumps()
        Path(args.out).write_text(text)
    return 0


def cmd_verify(args) -> int:
    if args.theorem == "no22":
        rep = verify_no_2_2(args.n)
        print(f"n={rep.n} classes={rep.classes} prop1_survivors={rep.prop1_survivors}")
        print(f"holds: {'true' if rep.holds else 'false'}")
        for g6 in rep.counterexamples:
            print(f"  rc(G)=rc(Gbar)=2: {g6}")
        _write_out(args, _dump(rep.to_document()))
        expected = args.n <= 7
        return 0 if rep.holds == expected else 1

    report = _census(args)
    if args.theorem == "bounds":
        problems = bound_violations(report)
        if report.max_sum != report.n + 2:
            problems.append(f"max_sum {report.max_sum} != n+2")
        want = SMALL_N_MIN_SUM.get(report.n, 4)
        if report.min_sum != want:
            problems.append(f"min_sum {report.min_sum} != {want}")
        print(f"n={report.n} classes={report.class_count} min_sum={report.min_sum} "
              f"max_sum={report.max_sum}")
        doc = {"n": report.n, "min_sum": report.min_sum, "max_sum": report.max_sum,
               "violations": problems}
    else:
        checked, problems = gamma_c_violations(report)
        print(f"n={report.n} graphs with min degree >= 2 checked: {checked}")
        doc = {"n": report.n, "checked": checked, "violations": problems}
    for p in problems:
        print(f"  violation: {p}")
    print(f"holds: {'true' if not problems else 'false'}")
    _write_out(args, _dump(doc))
    return 0 if not problems else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcng", description=__doc__.splitlines()[0])
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p, required=True):
        p.add_argument("--graph6", required=required, help="graph6 string or @file")

    def common(p):
        p.add_argument("--out", help="write the machine-readable report here")
        p.add_argument("--effort-override", action="store_true")
        p.add_argument("--threads", type=int, default=1, help="worker processes; 0 = auto")

    p = sub.add_parser("rc", help="exact rainbow connection number")
    graph_arg(p)
    common(p)
    p.set_defaults(func=cmd_rc)

    p = sub.add_parser("check", help="is a colouring rainbow connecting")
    graph_arg(p, required=False)
    p.add_argument("--coloring", required=True)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("path", help="a rainbow u-v path under a colouring")
    graph_arg(p, required=False)
    p.add_argument("--coloring", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("complement", help="graph6 of the complement")
    graph_arg(p)
    common(p)
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("gamma", help="connected domination number")
    graph_arg(p)
    common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("construct", help="extremal pairs with colourings")
    p.add_argument("--family", required=True, choices=["double-star", "lower-family", "small-cases"])
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("census", help="rc sums over all complementary connected pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checkpoint", help="checkpoint file for resumable runs")
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check a stated bound exhaustively")
    p.add_argument("--theorem", required=True, choices=["no22", "bounds", "gammac"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checkpoint", help="checkpoint file for resumable runs")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger(__name__).debug("kernel backend: %s", kernels.BACKEND)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: malformed graph6: {exc}", file=sys.stderr)
        return 2
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ColoringBindingError, EffortLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
