"""Hop distances from the source and to the target, and the candidate edge space.

The bidirectional search guarantees exact distances only where they can
matter: every vertex y with dist(s, y) + dist(y, t) <= k ends up with both
entries exact.  Vertices outside that region may keep the INFINITY
sentinel even when they are reachable.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import DirectedGraph, Query

INFINITY = 0x7FFFFFFF


@dataclass
class DistanceField:
    """Per-vertex hop distances for one query.

    dist_from_s[v] is the minimum number of edges on an s -> v path,
    dist_to_t[v] the minimum on a v -> t path; INFINITY where unknown.
    """

    query: Query
    dist_from_s: list[int]
    dist_to_t: list[int]


def adaptive_bidirectional_distances(g: DirectedGraph, q: Query) -> DistanceField:
    """Run forward BFS from s and backward BFS from t, bounded by k.

    Each round expands whichever pending frontier is smaller (ties go
    forward) until the two depths sum to k.  Each direction then finishes
    its remaining levels restricted to vertices the opposite direction
    has already touched, so only vertices that can lie on a <= k-hop
    s -> t walk are completed.
    """
    n = g.vertex_count
    s, t, k = q.s, q.t, q.k
    dist_from_s = [INFINITY] * n
    dist_to_t = [INFINITY] * n
    dist_from_s[s] = 0
    dist_to_t[t] = 0
    fwd_frontier = [s]
    bwd_frontier = [t]
    depth_f = 0
    depth_b = 0

    while depth_f + depth_b < k and (fwd_frontier or bwd_frontier):
        forward_turn = bool(fwd_frontier) and (
            not bwd_frontier or len(fwd_frontier) <= len(bwd_frontier)
        )
        if forward_turn:
            depth_f += 1
            next_frontier = []
            for u in fwd_frontier:
                for v in g.out_adjacency[u]:
                    if dist_from_s[v] == INFINITY:
                        dist_from_s[v] = depth_f
                        next_frontier.append(v)
            fwd_frontier = next_frontier
        else:
            depth_b += 1
            next_frontier = []
            for u in bwd_frontier:
                for v in g.in_adjacency[u]:
                    if dist_to_t[v] == INFINITY:
                        dist_to_t[v] = depth_b
                        next_frontier.append(v)
            bwd_frontier = next_frontier

    # Forward completion over backward-touched vertices.  Any vertex with
    # dist_from_s > depth_f that still fits a k-hop walk must satisfy
    # dist_to_t < depth_b, so the restriction loses nothing.
    level = depth_f
    frontier = fwd_frontier
    while frontier and level < k:
        level += 1
        next_frontier = []
        for u in frontier:
            for v in g.out_adjacency[u]:
                if (
                    dist_from_s[v] == INFINITY
                    and dist_to_t[v] != INFINITY
                    and level + dist_to_t[v] <= k
                ):
                    dist_from_s[v] = level
                    next_frontier.append(v)
        frontier = next_frontier

    level = depth_b
    frontier = bwd_frontier
    while frontier and level < k:
        level += 1
        next_frontier = []
        for u in frontier:
            for v in g.in_adjacency[u]:
                if (
                    dist_to_t[v] == INFINITY
                    and dist_from_s[v] != INFINITY
                    and level + dist_from_s[v] <= k
                ):
                    dist_to_t[v] = level
                    next_frontier.append(v)
        frontier = next_frontier

    return DistanceField(query=q, dist_from_s=dist_from_s, dist_to_t=dist_to_t)


def k_hop_subgraph(g: DirectedGraph, q: Query, d: DistanceField) -> list[tuple[int, int]]:
    """Edges (u, v) with dist_from_s[u] + 1 + dist_to_t[v] <= k, sorted by (u, v).

    This is the candidate space: every edge of every <= k-hop s -> t walk
    (simple or not) satisfies the bound, so the simple path graph is a
    subset of these edges.
    """
    k = q.k
    dist_from_s = d.dist_from_s
    dist_to_t = d.dist_to_t
    candidates = []
    for u in range(g.vertex_count):
        du = dist_from_s[u]
        if du == INFINITY or du + 1 > k:
            continue
        budget = k - du - 1
        for v in g.out_adjacency[u]:
            if dist_to_t[v] <= budget:
                candidates.append((u, v))
    return candidates
