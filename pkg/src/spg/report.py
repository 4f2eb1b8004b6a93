"""Per-query benchmark records and the aggregate run report.

The TSV column set and the JSON field names below are the compatibility
contract for downstream tooling; changing them is a breaking change.
"""
from __future__ import annotations

import csv
import json
import statistics
from dataclasses import asdict, dataclass, field
from typing import IO

from .graph import DirectedGraph, Query
from .labeling import UpperBoundGraph
from .verify import SimplePathGraph

# records.tsv layout, one row per (query, mode) run
TSV_COLUMNS = [
    "index",
    "s",
    "t",
    "k",
    "mode",
    "status",
    "error",
    "edges",
    "vertices",
    "definite",
    "undetermined",
    "failing",
    "confirmed",
    "distance_ms",
    "propagation_ms",
    "labeling_ms",
    "verification_ms",
    "total_ms",
    "coverage_ratio",
    "redundant_ratio",
    "matches_oracle",
]

PHASE_NAMES = ("distance", "propagation", "labeling", "verification")


@dataclass
class QueryRecord:
    """Outcome of running one query in one mode.

    s and t are external vertex labels.  Count fields are None when the
    mode does not produce them (the oracle has no label counts) or when
    the run failed; coverage_ratio is |result| / |E|, redundant_ratio the
    relative edge surplus of the upper bound over the exact result.
    """

    index: int
    s: int
    t: int
    k: int
    mode: str
    status: str = "ok"
    error: str | None = None
    edges: int | None = None
    vertices: int | None = None
    definite: int | None = None
    undetermined: int | None = None
    failing: int | None = None
    confirmed: int | None = None
    phase_ms: dict[str, float] = field(default_factory=dict)
    total_ms: float = 0.0
    coverage_ratio: float | None = None
    redundant_ratio: float | None = None
    matches_oracle: bool | None = None


@dataclass
class ModeAggregate:
    """Summary over the ok records of one mode; recomputable from them."""

    mode: str
    queries: int
    errors: int
    mean_ms: float | None = None
    median_ms: float | None = None
    max_ms: float | None = None
    mean_coverage_ratio: float | None = None
    mean_redundant_ratio: float | None = None


@dataclass
class RunReport:
    graph_file: str
    graph_vertices: int
    graph_edges: int
    modes: list[str]
    query_count: int
    oracle_mismatches: int
    aggregates: list[ModeAggregate]
    records: list[QueryRecord]


def eve_record(
    index: int, g: DirectedGraph, q: Query, spg: SimplePathGraph
) -> QueryRecord:
    stats = spg.stats
    edge_total = len(spg.edges)
    upper_total = stats.definite_edges + stats.undetermined_edges
    coverage = edge_total / g.edge_count if g.edge_count else None
    redundant = (upper_total - edge_total) / edge_total if edge_total else None
    return QueryRecord(
        index=index,
        s=g.labels[q.s],
        t=g.labels[q.t],
        k=q.k,
        mode="eve",
        edges=edge_total,
        vertices=len(spg.vertices),
        definite=stats.definite_edges,
        undetermined=stats.undetermined_edges,
        failing=stats.failing_edges,
        confirmed=stats.confirmed_undetermined,
        phase_ms=dict(stats.phase_ms),
        total_ms=stats.phase_ms.get("total", 0.0),
        coverage_ratio=coverage,
        redundant_ratio=redundant,
    )


def upper_record(
    index: int,
    g: DirectedGraph,
    q: Query,
    ub: UpperBoundGraph,
    phase_ms: dict[str, float],
) -> QueryRecord:
    selected = ub.selected_edges()
    vertices = {v for edge in selected for v in edge}
    timings = dict(phase_ms)
    timings.setdefault("total", sum(phase_ms.values()))
    return QueryRecord(
        index=index,
        s=g.labels[q.s],
        t=g.labels[q.t],
        k=q.k,
        mode="upper",
        edges=len(selected),
        vertices=len(vertices),
        definite=ub.label_count(2),
        undetermined=ub.label_count(1),
        failing=ub.label_count(0),
        phase_ms=timings,
        total_ms=timings["total"],
    )


def oracle_record(
    index: int,
    g: DirectedGraph,
    q: Query,
    spg: SimplePathGraph,
    elapsed_ms: float,
) -> QueryRecord:
    return QueryRecord(
        index=index,
        s=g.labels[q.s],
        t=g.labels[q.t],
        k=q.k,
        mode="oracle",
        edges=len(spg.edges),
        vertices=len(spg.vertices),
        phase_ms={"total": elapsed_ms},
        total_ms=elapsed_ms,
    )


def error_record(
    index: int, g: DirectedGraph, q: Query, mode: str, message: str
) -> QueryRecord:
    return QueryRecord(
        index=index,
        s=g.labels[q.s],
        t=g.labels[q.t],
        k=q.k,
        mode=mode,
        status="error",
        error=message,
    )


def _mean(values: list[float]) -> float | None:
    return statistics.fmean(values) if values else None


def aggregate_mode(mode: str, records: list[QueryRecord]) -> ModeAggregate:
    mine = [r for r in records if r.mode == mode]
    ok = [r for r in mine if r.status == "ok"]
    times = [r.total_ms for r in ok]
    return ModeAggregate(
        mode=mode,
        queries=len(mine),
        errors=len(mine) - len(ok),
        mean_ms=_mean(times),
        median_ms=statistics.median(times) if times else None,
        max_ms=max(times) if times else None,
        mean_coverage_ratio=_mean(
            [r.coverage_ratio for r in ok if r.coverage_ratio is not None]
        ),
        mean_redundant_ratio=_mean(
            [r.redundant_ratio for r in ok if r.redundant_ratio is not None]
        ),
    )


def build_report(
    graph_file: str,
    g: DirectedGraph,
    modes: list[str],
    query_count: int,
    records: list[QueryRecord],
) -> RunReport:
    mismatches = sum(1 for r in records if r.matches_oracle is False)
    return RunReport(
        graph_file=graph_file,
        graph_vertices=g.vertex_count,
        graph_edges=g.edge_count,
        modes=list(modes),
        query_count=query_count,
        oracle_mismatches=mismatches,
        aggregates=[aggregate_mode(mode, records) for mode in modes],
        records=records,
    )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def record_row(record: QueryRecord) -> list[str]:
    phases = record.phase_ms
    raw = [
        record.index,
        record.s,
        record.t,
        record.k,
        record.mode,
        record.status,
        record.error,
        record.edges,
        record.vertices,
        record.definite,
        record.undetermined,
        record.failing,
        record.confirmed,
        phases.get("distance"),
        phases.get("propagation"),
        phases.get("labeling"),
        phases.get("verification"),
        record.total_ms,
        record.coverage_ratio,
        record.redundant_ratio,
        record.matches_oracle,
    ]
    return [_cell(value) for value in raw]


def write_records_tsv(records: list[QueryRecord], handle: IO[str]) -> None:
    writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
    writer.writerow(TSV_COLUMNS)
    for record in records:
        writer.writerow(record_row(record))


def report_to_json(report: RunReport) -> str:
    return json.dumps(asdict(report), indent=2, sort_keys=True) + "\n"
