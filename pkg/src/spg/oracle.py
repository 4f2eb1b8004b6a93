"""Brute-force references: path enumeration, essential sets, and metrics.

Everything here is deliberately naive.  The enumerator is a plain DFS
with on-stack marking and a hop budget, with no distance-based pruning,
so it can serve as an independent check of the staged pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .graph import DirectedGraph, Query
from .verify import SimplePathGraph, SpgStats

if TYPE_CHECKING:
    from .labeling import UpperBoundGraph

DEFAULT_PATH_LIMIT = 10_000_000

FORWARD = "forward"
BACKWARD = "backward"


class PathLimitError(RuntimeError):
    """Raised when enumeration would exceed the configured path cap."""

    def __init__(self, limit: int):
        super().__init__(
            f"more than {limit} simple paths; refusing to truncate the enumeration"
        )
        self.limit = limit


@dataclass
class PathSet:
    """All k-hop-bounded simple s -> t paths, as internal vertex sequences."""

    query: Query
    paths: list[list[int]]

    def __len__(self) -> int:
        return len(self.paths)


def enumerate_simple_paths(
    g: DirectedGraph, q: Query, *, limit: int = DEFAULT_PATH_LIMIT
) -> PathSet:
    """Enumerate every simple s -> t path with at most k edges.

    Paths come out in DFS order with neighbor lists ascending, so the
    result is deterministic.  Exceeding `limit` raises PathLimitError
    rather than returning a partial answer.
    """
    out_adjacency = g.out_adjacency
    s, t, k = q.s, q.t, q.k
    paths: list[list[int]] = []
    on_stack = [False] * g.vertex_count
    on_stack[s] = True
    stack = [s]

    def dfs(cur: int, remaining: int) -> None:
        for nxt in out_adjacency[cur]:
            if nxt == t:
                paths.append(stack + [t])
                if len(paths) > limit:
                    raise PathLimitError(limit)
            elif remaining >= 2 and not on_stack[nxt]:
                on_stack[nxt] = True
                stack.append(nxt)
                dfs(nxt, remaining - 1)
                stack.pop()
                on_stack[nxt] = False

    if k >= 1:
        dfs(s, k)
    return PathSet(query=q, paths=paths)


def oracle_spg(paths: PathSet) -> SimplePathGraph:
    """Union of the enumerated paths' edges, as a SimplePathGraph."""
    edges: set[tuple[int, int]] = set()
    for path in paths.paths:
        for i in range(len(path) - 1):
            edges.add((path[i], path[i + 1]))
    sorted_edges = sorted(edges)
    vertices = sorted({v for edge in sorted_edges for v in edge})
    return SimplePathGraph(
        query=paths.query, edges=sorted_edges, vertices=vertices, stats=SpgStats()
    )


def brute_ev(
    g: DirectedGraph, q: Query, vertex: int, layer: int, direction: str
) -> frozenset[int] | None:
    """Intersection of vertex sets over bounded simple paths, by enumeration.

    Forward: paths s -> vertex of at most `layer` edges avoiding t.
    Backward: paths vertex -> t of at most `layer` edges avoiding s
    (enumerated from t over reversed edges).  Returns None when no such
    path exists.
    """
    if direction == FORWARD:
        source, excluded, adjacency = q.s, q.t, g.out_adjacency
    elif direction == BACKWARD:
        source, excluded, adjacency = q.t, q.s, g.in_adjacency
    else:
        raise ValueError(f"unknown direction: {direction!r}")

    if vertex == excluded:
        return None
    if vertex == source:
        return frozenset({source})

    intersection: set[int] | None = None
    on_stack = [False] * g.vertex_count
    on_stack[source] = True
    stack = [source]

    def dfs(cur: int, remaining: int) -> None:
        nonlocal intersection
        for nxt in adjacency[cur]:
            if nxt == excluded or on_stack[nxt]:
                continue
            if nxt == vertex:
                found = set(stack)
                found.add(vertex)
                if intersection is None:
                    intersection = found
                else:
                    intersection &= found
            elif remaining >= 2:
                on_stack[nxt] = True
                stack.append(nxt)
                dfs(nxt, remaining - 1)
                stack.pop()
                on_stack[nxt] = False

    if layer >= 1:
        dfs(source, layer)
    return None if intersection is None else frozenset(intersection)


@dataclass
class Metrics:
    """Edge-count ratios comparing the result against graph and upper bound."""

    graph_edges: int
    spg_edges: int
    upper_edges: int
    coverage_ratio: float
    redundant_ratio: float | None


def compute_metrics(
    g: DirectedGraph, spg: SimplePathGraph, upper: "UpperBoundGraph"
) -> Metrics:
    """Coverage ratio |result| / |E| and redundancy of the upper bound.

    The redundancy ratio (|upper| - |result|) / |result| is None when the
    result is empty, marking it undefined rather than dividing by zero.
    """
    spg_edges = len(spg.edges)
    upper_edges = upper.selected_edge_count()
    coverage = spg_edges / g.edge_count if g.edge_count else 0.0
    redundancy = None if spg_edges == 0 else (upper_edges - spg_edges) / spg_edges
    return Metrics(
        graph_edges=g.edge_count,
        spg_edges=spg_edges,
        upper_edges=upper_edges,
        coverage_ratio=coverage,
        redundant_ratio=redundancy,
    )


def write_paths(paths: PathSet, g: DirectedGraph) -> str:
    """Render paths one per line as space-separated external labels."""
    return "".join(
        " ".join(str(g.labels[v]) for v in path) + "\n" for path in paths.paths
    )
