"""Confirm or reject undetermined edges of the upper-bound graph.

An undetermined edge e(u, v) belongs to the result exactly when some
simple s -> t path of at most k edges runs through it.  Because the first
two and last two edges of any such path are definite, it is enough to
search for the interior segment: a simple path from a departure vertex
to an arrival vertex of at most k - 4 edges passing through e(u, v),
whose endpoints can be extended by recorded in/out witnesses disjoint
from the segment.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Query
from .labeling import BoundaryIndex, UpperBoundGraph


@dataclass
class SpgStats:
    """Counters and phase timings recorded while answering one query."""

    candidate_edges: int = 0
    failing_edges: int = 0
    undetermined_edges: int = 0
    definite_edges: int = 0
    confirmed_undetermined: int = 0
    max_stack_edges: int = 0
    phase_ms: dict[str, float] = field(default_factory=dict)


@dataclass
class SimplePathGraph:
    """The answer to a query: all edges on <= k-hop simple s -> t paths."""

    query: Query
    edges: list[tuple[int, int]]
    vertices: list[int]
    stats: SpgStats

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)


def _bfs_from_set(
    adjacency: dict[int, list[int]], sources: list[int]
) -> dict[int, int]:
    """Multi-source BFS distance map over the given adjacency."""
    dist = {v: 0 for v in sources}
    frontier = sources
    level = 0
    while frontier:
        level += 1
        next_frontier = []
        for u in frontier:
            for v in adjacency.get(u, ()):
                if v not in dist:
                    dist[v] = level
                    next_frontier.append(v)
        frontier = next_frontier
    return dist


def order_adjacency(ub: UpperBoundGraph, boundary: BoundaryIndex) -> None:
    """Reorder the upper-bound adjacency to steer the search, in place.

    Out-neighbors are sorted by ascending hop distance to the closest
    arrival, and arrivals themselves (distance 0) by descending out
    witness count; in-neighbors symmetrically by distance from the
    closest departure and descending in witness count.  Vertices that
    cannot reach any arrival (or be reached from any departure) sort
    last.  No-op when either boundary set is empty.
    """
    if not boundary.arrivals or not boundary.departures:
        return
    unreachable = len(ub.out_adjacency) + len(ub.in_adjacency) + 1
    to_arrival = _bfs_from_set(ub.in_adjacency, sorted(boundary.arrivals))
    from_departure = _bfs_from_set(ub.out_adjacency, sorted(boundary.departures))

    def out_key(v: int) -> tuple[int, int, int]:
        dist = to_arrival.get(v, unreachable)
        witnesses = len(boundary.out_a.get(v, ())) if dist == 0 else 0
        return (dist, -witnesses, v)

    def in_key(v: int) -> tuple[int, int, int]:
        dist = from_departure.get(v, unreachable)
        witnesses = len(boundary.in_d.get(v, ())) if dist == 0 else 0
        return (dist, -witnesses, v)

    for neighbors in ub.out_adjacency.values():
        neighbors.sort(key=out_key)
    for neighbors in ub.in_adjacency.values():
        neighbors.sort(key=in_key)


def verify_undetermined(
    ub: UpperBoundGraph, boundary: BoundaryIndex, q: Query
) -> SimplePathGraph:
    """Build the final edge set: definite edges plus confirmed undetermined ones.

    For k <= 4 there are no undetermined edges and the definite edges are
    returned directly.  Otherwise each still-unconfirmed undetermined
    edge e(u, v) seeds a depth-bounded search: forward from v over
    upper-bound out-edges looking for an arrival, then backward from u
    over in-edges looking for a departure, sharing one depth counter so
    the stacked segment never exceeds k - 4 edges.  A hit adds every
    stacked edge at once.
    """
    k = q.k
    result: set[tuple[int, int]] = set(ub.definite_edges)
    stats = SpgStats(
        candidate_edges=len(ub.candidate_edges),
        failing_edges=ub.label_count(0),
        undetermined_edges=len(ub.undetermined_edges),
        definite_edges=len(ub.definite_edges),
    )

    if k >= 5 and ub.undetermined_edges:
        out_adjacency = ub.out_adjacency
        in_adjacency = ub.in_adjacency
        departures = boundary.departures
        arrivals = boundary.arrivals
        in_d = boundary.in_d
        out_a = boundary.out_a
        depth_cap = k - 4
        on_stack: set[int] = set()
        edge_stack: list[tuple[int, int]] = []

        def try_add_edges(departure: int, arrival: int) -> bool:
            in_choices = [x for x in in_d[departure] if x not in on_stack]
            if not in_choices:
                return False
            out_choices = [y for y in out_a[arrival] if y not in on_stack]
            if not out_choices:
                return False
            if (
                len(in_choices) == 1
                and len(out_choices) == 1
                and in_choices[0] == out_choices[0]
            ):
                return False
            result.update(edge_stack)
            return True

        def backward(cur: int, level: int, arrival: int) -> bool:
            if cur in departures and try_add_edges(cur, arrival):
                return True
            if level < depth_cap:
                for prv in in_adjacency.get(cur, ()):
                    if prv not in on_stack:
                        on_stack.add(prv)
                        edge_stack.append((prv, cur))
                        stats.max_stack_edges = max(
                            stats.max_stack_edges, len(edge_stack)
                        )
                        if backward(prv, level + 1, arrival):
                            return True
                        edge_stack.pop()
                        on_stack.discard(prv)
            return False

        def forward(cur: int, level: int, u: int) -> bool:
            if cur in arrivals and backward(u, level, cur):
                return True
            if level < depth_cap:
                for nxt in out_adjacency.get(cur, ()):
                    if nxt not in on_stack:
                        on_stack.add(nxt)
                        edge_stack.append((cur, nxt))
                        stats.max_stack_edges = max(
                            stats.max_stack_edges, len(edge_stack)
                        )
                        if forward(nxt, level + 1, u):
                            return True
                        edge_stack.pop()
                        on_stack.discard(nxt)
            return False

        for u, v in ub.undetermined_edges:
            if (u, v) in result:
                continue
            on_stack = {u, v, q.s, q.t}
            edge_stack = [(u, v)]
            stats.max_stack_edges = max(stats.max_stack_edges, 1)
            forward(v, 1, u)

    edges = sorted(result)
    stats.confirmed_undetermined = len(edges) - stats.definite_edges
    vertices = sorted({v for edge in edges for v in edge})
    return SimplePathGraph(query=q, edges=edges, vertices=vertices, stats=stats)
