"""Directed graph container, edge-list ingestion, and query sampling.

Graphs are stored with dense internal vertex indices.  External vertex
labels (arbitrary non-negative integers from the input file) are mapped
to internal indices by ascending label, so sorting edges by internal
index pairs and sorting them by external label pairs agree.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

MAX_LABEL = (1 << 63) - 1
MAX_K = 255

_COMMENT_PREFIXES = ("#", "%")


class EdgeListParseError(ValueError):
    """Raised for a malformed edge-list or query-file line."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class QuerySampleError(RuntimeError):
    """Raised when rejection sampling cannot produce enough query pairs."""

    def __init__(self, found: int, requested: int, attempts: int):
        super().__init__(
            f"found only {found} of {requested} valid query pairs "
            f"within {attempts} attempts"
        )
        self.found = found
        self.requested = requested
        self.attempts = attempts


@dataclass(frozen=True)
class Query:
    """A single query: source, target, and hop budget (internal indices)."""

    s: int
    t: int
    k: int

    def __post_init__(self):
        if self.s == self.t:
            raise ValueError("query requires distinct source and target")
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"hop budget must be in [1, {MAX_K}], got {self.k}")


@dataclass(eq=True)
class DirectedGraph:
    """Immutable-by-convention directed graph with dense vertex indices.

    out_adjacency[u] and in_adjacency[v] are ascending lists of internal
    indices.  labels[i] is the external label of internal vertex i, and
    label_index inverts that mapping.
    """

    vertex_count: int
    edge_count: int
    out_adjacency: list[list[int]]
    in_adjacency: list[list[int]]
    labels: list[int]
    label_index: dict[int, int] = field(repr=False)

    def to_internal(self, label: int) -> int:
        """Map an external label to its internal index (KeyError if unknown)."""
        return self.label_index[label]

    def to_label(self, vertex: int) -> int:
        return self.labels[vertex]

    def edges(self) -> Iterable[tuple[int, int]]:
        """Yield edges as internal index pairs in ascending (u, v) order."""
        for u in range(self.vertex_count):
            for v in self.out_adjacency[u]:
                yield (u, v)


def _parse_int_token(token: str, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise EdgeListParseError(line_number, f"not an integer: {token!r}") from None
    if value < 0:
        raise EdgeListParseError(line_number, f"negative label: {value}")
    if value > MAX_LABEL:
        raise EdgeListParseError(line_number, f"label does not fit in 63 bits: {value}")
    return value


def load_edge_list(lines: Iterable[str]) -> DirectedGraph:
    """Build a DirectedGraph from edge-list text.

    Each non-comment line holds two whitespace-separated non-negative
    integer labels "u v" meaning a directed edge u -> v.  Lines starting
    with '#' or '%' and blank lines are ignored.  Self-loops are dropped,
    duplicate edges are collapsed, and labels are densely re-indexed.
    """
    raw_edges: set[tuple[int, int]] = set()
    seen_labels: set[int] = set()
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(_COMMENT_PREFIXES):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                line_number, f"expected two labels, got {len(tokens)}"
            )
        u = _parse_int_token(tokens[0], line_number)
        v = _parse_int_token(tokens[1], line_number)
        seen_labels.add(u)
        seen_labels.add(v)
        if u == v:
            continue
        raw_edges.add((u, v))

    labels = sorted(seen_labels)
    label_index = {label: i for i, label in enumerate(labels)}
    n = len(labels)
    out_adjacency: list[list[int]] = [[] for _ in range(n)]
    in_adjacency: list[list[int]] = [[] for _ in range(n)]
    for u_label, v_label in raw_edges:
        out_adjacency[label_index[u_label]].append(label_index[v_label])
        in_adjacency[label_index[v_label]].append(label_index[u_label])
    for adjacency in (out_adjacency, in_adjacency):
        for neighbors in adjacency:
            neighbors.sort()
    return DirectedGraph(
        vertex_count=n,
        edge_count=len(raw_edges),
        out_adjacency=out_adjacency,
        in_adjacency=in_adjacency,
        labels=labels,
        label_index=label_index,
    )


def load_graph(path: str) -> DirectedGraph:
    """Load an edge-list file from disk."""
    with open(path, "r", encoding="utf-8") as handle:
        return load_edge_list(handle)


def serialize_edge_list(g: DirectedGraph) -> str:
    """Render the graph back to edge-list text, one "u v" line per edge.

    Edges are sorted by (u, v) external labels; isolated vertices (from
    dropped self-loops) are preserved as "u u" lines so a reload sees the
    same vertex set.
    """
    lines = []
    covered: set[int] = set()
    for u, v in g.edges():
        lines.append(f"{g.labels[u]} {g.labels[v]}\n")
        covered.add(u)
        covered.add(v)
    for vertex in range(g.vertex_count):
        if vertex not in covered:
            lines.append(f"{g.labels[vertex]} {g.labels[vertex]}\n")
    return "".join(lines)


def reverse_view(g: DirectedGraph) -> DirectedGraph:
    """Return a view with out- and in-adjacency swapped (no copying)."""
    return DirectedGraph(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        out_adjacency=g.in_adjacency,
        in_adjacency=g.out_adjacency,
        labels=g.labels,
        label_index=g.label_index,
    )


def reachable_within(g: DirectedGraph, start: int, hops: int) -> set[int]:
    """Vertices reachable from start by directed paths of at most `hops` edges."""
    seen = {start}
    frontier = [start]
    for _ in range(hops):
        if not frontier:
            break
        next_frontier = []
        for u in frontier:
            for v in g.out_adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    next_frontier.append(v)
        frontier = next_frontier
    return seen


def sample_queries(
    g: DirectedGraph,
    k: int,
    n: int,
    seed: int,
    *,
    attempt_factor: int = 100,
) -> list[Query]:
    """Sample n distinct query pairs (s, t) with t reachable from s in <= k hops.

    Rejection sampling: each attempt draws a random s, collects the
    vertices reachable within k hops, and draws t among them.  Attempts
    that land on an empty candidate set or repeat an already sampled pair
    are rejected.  After attempt_factor * n attempts without n distinct
    pairs, QuerySampleError reports how many were found.
    """
    if g.vertex_count == 0:
        raise QuerySampleError(0, n, 0)
    rng = random.Random(seed)
    cap = attempt_factor * n
    chosen: list[Query] = []
    seen_pairs: set[tuple[int, int]] = set()
    attempts = 0
    while len(chosen) < n and attempts < cap:
        attempts += 1
        s = rng.randrange(g.vertex_count)
        candidates = sorted(reachable_within(g, s, k) - {s})
        if not candidates:
            continue
        t = rng.choice(candidates)
        if (s, t) in seen_pairs:
            continue
        seen_pairs.add((s, t))
        chosen.append(Query(s, t, k))
    if len(chosen) < n:
        raise QuerySampleError(len(chosen), n, attempts)
    return chosen


def parse_query_file(lines: Iterable[str], g: DirectedGraph) -> list[Query]:
    """Parse "s<TAB>t<TAB>k" lines (external labels) into internal queries.

    Blank lines and '#'/'%' comments are tolerated.  Unknown labels and
    invalid triples are reported with their line number.
    """
    queries: list[Query] = []
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(_COMMENT_PREFIXES):
            continue
        tokens = stripped.split("\t") if "\t" in stripped else stripped.split()
        if len(tokens) != 3:
            raise EdgeListParseError(
                line_number, f"expected 's<TAB>t<TAB>k', got {stripped!r}"
            )
        s_label = _parse_int_token(tokens[0], line_number)
        t_label = _parse_int_token(tokens[1], line_number)
        try:
            k = int(tokens[2])
        except ValueError:
            raise EdgeListParseError(
                line_number, f"hop budget is not an integer: {tokens[2]!r}"
            ) from None
        for label in (s_label, t_label):
            if label not in g.label_index:
                raise EdgeListParseError(
                    line_number, f"label {label} does not occur in the graph"
                )
        try:
            queries.append(
                Query(g.label_index[s_label], g.label_index[t_label], k)
            )
        except ValueError as exc:
            raise EdgeListParseError(line_number, str(exc)) from None
    return queries


def write_query_file(queries: Iterable[Query], g: DirectedGraph) -> str:
    """Render queries as "s<TAB>t<TAB>k" lines with external labels."""
    return "".join(
        f"{g.labels[q.s]}\t{g.labels[q.t]}\t{q.k}\n" for q in queries
    )
