"""Bidirectional distances and the candidate edge space."""
from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from spg.distance import (
    INFINITY,
    adaptive_bidirectional_distances,
    k_hop_subgraph,
)
from spg.graph import DirectedGraph, Query

from .conftest import make_graph, random_graph, random_query


def full_bfs(adjacency: list[list[int]], start: int) -> list[int]:
    """Plain reference BFS over the whole graph."""
    dist = [INFINITY] * len(adjacency)
    dist[start] = 0
    frontier = [start]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for u in frontier:
            for v in adjacency[u]:
                if dist[v] == INFINITY:
                    dist[v] = level
                    nxt.append(v)
        frontier = nxt
    return dist


def check_against_reference(g: DirectedGraph, q: Query) -> None:
    d = adaptive_bidirectional_distances(g, q)
    ref_from_s = full_bfs(g.out_adjacency, q.s)
    ref_to_t = full_bfs(g.in_adjacency, q.t)
    for v in range(g.vertex_count):
        # exact wherever the vertex can sit on a <= k-hop s -> t walk
        if ref_from_s[v] + ref_to_t[v] <= q.k:
            assert d.dist_from_s[v] == ref_from_s[v]
            assert d.dist_to_t[v] == ref_to_t[v]
        # and never wrong where merely present
        if d.dist_from_s[v] != INFINITY:
            assert d.dist_from_s[v] == ref_from_s[v]
        if d.dist_to_t[v] != INFINITY:
            assert d.dist_to_t[v] == ref_to_t[v]


def test_f1_spot_distances(f1):
    d = adaptive_bidirectional_distances(f1, Query(0, 5, 4))
    assert d.dist_from_s[0] == 0
    assert d.dist_to_t[5] == 0
    assert d.dist_from_s[4] == 2
    assert d.dist_to_t[4] == 1
    assert d.dist_from_s[5] == 3


def test_f3_detour_vertices_in_range(f3):
    d = adaptive_bidirectional_distances(f3, Query(0, 7, 7))
    assert d.dist_from_s[5] == 3
    assert d.dist_to_t[6] == 3


def test_unreachable_keeps_sentinel():
    g = make_graph("0 1\n2 3\n")
    d = adaptive_bidirectional_distances(g, Query(0, 1, 4))
    assert d.dist_from_s[g.to_internal(2)] == INFINITY
    assert d.dist_to_t[g.to_internal(3)] == INFINITY


def test_candidate_space_f1(f1):
    q3 = Query(0, 5, 3)
    d3 = adaptive_bidirectional_distances(f1, q3)
    assert k_hop_subgraph(f1, q3, d3) == [(0, 2), (2, 4), (4, 5)]
    q4 = Query(0, 5, 4)
    d4 = adaptive_bidirectional_distances(f1, q4)
    assert k_hop_subgraph(f1, q4, d4) == sorted(f1.edges())
    q2 = Query(0, 5, 2)
    d2 = adaptive_bidirectional_distances(f1, q2)
    assert k_hop_subgraph(f1, q2, d2) == []


def test_candidate_space_grows_with_k(f3):
    previous: set = set()
    for k in range(1, 9):
        q = Query(0, 7, k)
        d = adaptive_bidirectional_distances(f3, q)
        current = set(k_hop_subgraph(f3, q, d))
        assert previous <= current
        previous = current


def test_edge_consistency_random():
    rng = random.Random(11)
    for trial in range(60):
        g = random_graph(rng, rng.randint(2, 18), rng.uniform(0.5, 4))
        q = random_query(rng, g, rng.randint(1, 8))
        if q is None:
            continue
        d = adaptive_bidirectional_distances(g, q)
        for u in range(g.vertex_count):
            for v in g.out_adjacency[u]:
                if d.dist_from_s[u] != INFINITY and d.dist_from_s[v] != INFINITY:
                    assert d.dist_from_s[v] <= d.dist_from_s[u] + 1
                if d.dist_to_t[u] != INFINITY and d.dist_to_t[v] != INFINITY:
                    assert d.dist_to_t[u] <= d.dist_to_t[v] + 1


@settings(deadline=None, max_examples=200)
@given(
    pairs=st.lists(
        st.tuples(st.integers(0, 13), st.integers(0, 13)), min_size=1, max_size=50
    ),
    k=st.integers(1, 9),
    seed=st.integers(0, 10_000),
)
def test_matches_reference_bfs(pairs, k, seed):
    g = load_pairs(pairs)
    q = random_query(random.Random(seed), g, k)
    if q is None:
        return
    check_against_reference(g, q)


def load_pairs(pairs):
    return make_graph("".join(f"{u} {v}\n" for u, v in pairs))
