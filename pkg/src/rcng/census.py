"""Exhaustive census of complementary connected pairs on few vertices."""

from __future__ import annotations

import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path

from .graph import (
    Graph,
    canonical_graph,
    canonical_key,
    complement,
    connected_domination_number,
    degree_profile,
    diameter,
    graph_from_key,
    is_connected,
    neighborhoods,
    parse_graph6,
    to_graph6,
)
from .solver import EdgeColoring, has_rainbow_k_coloring, rc_exact

log = logging.getLogger(__name__)

MIN_N, MAX_N = 4, 8
DEFAULT_MAX_CENSUS_N = 7


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Every graph on ``n`` vertices is a class representative on ``n - 1``
    vertices plus one new vertex, so extending every representative by every
    neighbourhood and deduplicating reaches all classes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return (Graph.empty(n),)
    keys = set()
    for h in graph_classes(n - 1):
        for subset in range(1 << (n - 1)):
            g = h.add_vertex(i for i in range(n - 1) if subset >> i & 1)
            keys.add(canonical_key(g))
    return tuple(graph_from_key(key) for key in sorted(keys))


def _check_range(n: int) -> None:
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"census supports {MIN_N} <= n <= {MAX_N}, got {n}")


def enumerate_both_connected(n: int):
    """Class representatives with ``G`` and its complement connected.

    Only one member of each complementary pair is yielded: the one whose
    canonical key is not larger.
    """
    _check_range(n)
    for g in graph_classes(n):
        if not is_connected(g):
            continue
        gb = complement(g)
        if not is_connected(gb):
            continue
        if canonical_key(g) <= canonical_key(gb):
            yield g


@dataclass(frozen=True)
class Prop1Verdict:
    diam_ok: bool
    degree_ok: bool
    neighborhood_ok: bool

    @property
    def passes(self) -> bool:
        return self.diam_ok and self.degree_ok and self.neighborhood_ok


def _no_vertex_covers_second_neighbourhood(g: Graph) -> bool:
    for v in range(g.n):
        n1, n2 = neighborhoods(g, v)
        if not n2:
            continue
        mask2 = sum(1 << w for w in n2)
        for u in n1:
            if g.adj[u] & mask2 == mask2:
                return False
    return True


def prop1_filter(g: Graph) -> Prop1Verdict:
    """Necessary conditions for ``rc(G) = rc(complement) = 2``."""
    gb = complement(g)
    n = g.n
    diam_ok = diameter(g) == 2 and diameter(gb) == 2
    degree_ok = True
    for side in (g, gb):
        lo, hi, _ = degree_profile(side)
        degree_ok &= 2 <= lo and hi <= n - 3
    neighborhood_ok = _no_vertex_covers_second_neighbourhood(g) and _no_vertex_covers_second_neighbourhood(gb)
    return Prop1Verdict(diam_ok, degree_ok, neighborhood_ok)


@dataclass(frozen=True)
class NGRecord:
    graph6_g: str
    graph6_gbar: str
    rc_g: int
    rc_gbar: int
    sum: int
    degree_sequence: list[int]
    diam_g: int
    diam_gbar: int


@dataclass
class CensusReport:
    n: int
    records: list[NGRecord]
    class_count: int
    min_sum: int
    max_sum: int
    min_witness: str
    max_witness: str
    witness_colorings: dict = field(default_factory=dict)
    runtime_stats: dict = field(default_factory=dict)
    generated: dict = field(default_factory=dict)

    @property
    def min_record(self) -> NGRecord:
        return next(r for r in self.records if r.graph6_g == self.min_witness)

    @property
    def max_record(self) -> NGRecord:
        return next(r for r in self.records if r.graph6_g == self.max_witness)

    @staticmethod
    def graph_of(record: NGRecord) -> Graph:
        return parse_graph6(record.graph6_g)

    def header(self) -> dict:
        return {
            "n": self.n,
            "class_count": self.class_count,
            "min_sum": self.min_sum,
            "max_sum": self.max_sum,
            "min_witness": self.min_witness,
            "max_witness": self.max_witness,
            "witness_colorings": self.witness_colorings,
            "runtime_stats": self.runtime_stats,
            "generated": self.generated,
        }

    def to_document(self) -> dict:
        doc = self.header()
        doc["records"] = [asdict(r) for r in self.records]
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=1, sort_keys=True) + "\n"

    def dumps_lines(self) -> str:
        """Streaming variant: header object, then one record object per line."""
        lines = [json.dumps({"header": self.header()}, sort_keys=True)]
        lines += [json.dumps({"record": asdict(r)}, sort_keys=True) for r in self.records]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CensusReport":
        text = text.strip()
        if text.startswith('{"header"'):
            rows = [json.loads(line) for line in text.splitlines()]
            doc = dict(rows[0]["header"])
            doc["records"] = [row["record"] for row in rows[1:]]
        else:
            doc = json.loads(text)
        records = [NGRecord(**r) for r in doc.pop("records")]
        return cls(records=records, **doc)


def _rc_job(key) -> tuple:
    cert = rc_exact(graph_from_key(key))
    return key, cert.value, cert.search_nodes


def _resolve_threads(threads: int) -> int:
    if threads == 0:
        return os.cpu_count() or 1
    return max(1, threads)


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def compute_rc_values(keys, threads: int = 1, checkpoint: Path | None = None, chunk_size: int = 256):
    """``{key: (rc, search_nodes)}`` for canonical keys, optionally checkpointed.

    With a checkpoint path, finished chunks are appended to ``<path>.results``
    and the last completed chunk index is recorded, so an interrupted run
    resumes where it stopped.
    """
    keys = sorted(keys)
    results: dict = {}
    start_chunk = 0
    results_path = None
    if checkpoint is not None:
        checkpoint = Path(checkpoint)
        results_path = checkpoint.with_name(checkpoint.name + ".results")
        state = json.loads(checkpoint.read_text()) if checkpoint.exists() else {}
        resumable = (
            results_path.exists()
            and state.get("chunk_size") == chunk_size
            and state.get("total") == len(keys)
        )
        if resumable:
            start_chunk = state["last_chunk"] + 1
            for line in results_path.read_text().splitlines():
                row = json.loads(line)
                results[tuple(row["key"])] = (row["rc"], row["nodes"])
        else:
            results_path.parent.mkdir(parents=True, exist_ok=True)
            results_path.write_text("")
    chunks = [keys[i : i + chunk_size] for i in range(0, len(keys), chunk_size)]
    workers = _resolve_threads(threads)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for ci in range(start_chunk, len(chunks)):
            chunk = chunks[ci]
            rows = pool.map(_rc_job, chunk, chunksize=8) if pool else map(_rc_job, chunk)
            fresh = []
            for key, value, nodes in rows:
                # identical keys always give identical values; a mismatch is a solver bug
                assert results.get(key, (value,))[0] == value
                results[key] = (value, nodes)
                fresh.append({"key": list(key), "rc": value, "nodes": nodes})
            if checkpoint is not None:
                with open(results_path, "a") as fh:
                    for row in fresh:
                        fh.write(json.dumps(row) + "\n")
                _atomic_write(
                    checkpoint,
                    json.dumps({"last_chunk": ci, "chunk_size": chunk_size, "total": len(keys)}),
                )
            log.info("rc chunk %d/%d done", ci + 1, len(chunks))
    finally:
        if pool:
            pool.shutdown()
    return results


def ng_census(
    n: int,
    threads: int = 1,
    effort_override: bool = False,
    checkpoint: Path | None = None,
) -> CensusReport:
    """Exact ``rc(G) + rc(complement)`` for every complementary connected class."""
    _check_range(n)
    if n > DEFAULT_MAX_CENSUS_N and not effort_override:
        raise ValueError(f"census at n={n} needs effort_override=True")
    t0 = time.perf_counter()
    reps = list(enumerate_both_connected(n))
    pairs = [(g, canonical_graph(complement(g))) for g in reps]
    keys = {canonical_key(h) for pair in pairs for h in pair}
    values = compute_rc_values(keys, threads=threads, checkpoint=checkpoint)
    records = []
    for g, gb in pairs:
        rc_g = values[canonical_key(g)][0]
        rc_gb = values[canonical_key(gb)][0]
        records.append(
            NGRecord(
                graph6_g=to_graph6(g),
                graph6_gbar=to_graph6(complement(g)),
                rc_g=rc_g,
                rc_gbar=rc_gb,
                sum=rc_g + rc_gb,
                degree_sequence=degree_profile(g)[2],
                diam_g=diameter(g),
                diam_gbar=diameter(gb),
            )
        )
    lo = min(records, key=lambda r: r.sum)
    hi = max(records, key=lambda r: r.sum)
    witness_colorings = {}
    for tag, rec in (("min", lo), ("max", hi)):
        g = parse_graph6(rec.graph6_g)
        witness_colorings[tag] = {
            "g": rc_exact(g).witness.to_document(),
            "g_bar": rc_exact(complement(g)).witness.to_document(),
        }
    return CensusReport(
        n=n,
        records=records,
        class_count=len(records),
        min_sum=lo.sum,
        max_sum=hi.sum,
        min_witness=lo.graph6_g,
        max_witness=hi.graph6_g,
        witness_colorings=witness_colorings,
        runtime_stats={
            "rc_computations": len(keys),
            "search_nodes": sum(v[1] for v in values.values()),
        },
        generated={"timestamp": time.time(), "elapsed_s": round(time.perf_counter() - t0, 3)},
    )


@dataclass
class NoTwoTwoReport:
    n: int
    holds: bool
    counterexamples: list[str]
    classes: int
    prop1_survivors: int
    witness_colorings: dict = field(default_factory=dict)

    def to_document(self) -> dict:
        return asdict(self)


def verify_no_2_2(n: int) -> NoTwoTwoReport:
    """Search for complementary connected pairs with ``rc = 2`` on both sides."""
    _check_range(n)
    classes = 0
    survivors = 0
    counterexamples = []
    colorings = {}
    for g in enumerate_both_connected(n):
        classes += 1
        if not prop1_filter(g).passes:
            continue
        survivors += 1
        sides = sorted((g, complement(g)), key=lambda h: h.m)
        found: list[EdgeColoring] = []
        for side in sides:
            c = has_rainbow_k_coloring(side, 2)
            if c is None:
                break
            found.append(c)
        if len(found) == 2:
            g6 = to_graph6(g)
            counterexamples.append(g6)
            colorings[g6] = [c.to_document() for c in found]
    return NoTwoTwoReport(n, not counterexamples, counterexamples, classes, survivors, colorings)


def bound_violations(report: CensusReport) -> list[str]:
    """Records breaking ``4 <= sum <= n + 2`` or ``rc >= diam`` on either side."""
    out = []
    for r in report.records:
        if not 4 <= r.sum <= report.n + 2:
            out.append(f"{r.graph6_g}: sum {r.sum} outside [4, {report.n + 2}]")
        if r.rc_g < r.diam_g or r.rc_gbar < r.diam_gbar:
            out.append(f"{r.graph6_g}: rc below diameter")
    return out


def gamma_c_violations(report: CensusReport) -> tuple[int, list[str]]:
    """Check ``rc <= gamma_c + 2`` on every census graph with minimum degree >= 2."""
    checked = 0
    out = []
    for r in report.records:
        for g6, rc in ((r.graph6_g, r.rc_g), (r.graph6_gbar, r.rc_gbar)):
            g = parse_graph6(g6)
            if degree_profile(g)[0] < 2:
                continue
            checked += 1
            gc = connected_domination_number(g)
            if rc > gc + 2:
                out.append(f"{g6}: rc={rc} > gamma_c+2={gc + 2}")
    return checked, out
