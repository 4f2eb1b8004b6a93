"""Shared fixtures: three small hand-checked graphs and a random generator.

Fixture vertex keys, for reading the expected values in the tests:

F1 (7 edges): 0=s, 1=a, 2=c, 3=h, 4=b, 5=t
    s->a, s->c, a->c, a->h, c->b, h->b, b->t
    Three s-t paths at k=4; exactly one at k=3; none at k=2.

F2 (chain): 0=s, 1..5=x1..x5, 6=t
    At k=6 the two middle edges are undetermined and both get confirmed.

F3 (10 edges): 0=s, 1=c1, 2=c2, 3=w, 4=z, 5=u, 6=v, 7=t
    s->c1, s->c2, c1->w, c2->z, w->z, z->t plus the detour u->v, v->w,
    w->u, z->u.  At k=7 the detour edges (u,v),(v,w) are undetermined and
    both get rejected; (w,u),(z,u) fail outright.
"""
from __future__ import annotations

import random

import pytest

from spg.graph import DirectedGraph, Query, load_edge_list

F1_TEXT = "0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n4 5\n"
F2_TEXT = "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n"
F3_TEXT = "0 1\n0 2\n1 3\n2 4\n3 4\n4 7\n5 6\n6 3\n3 5\n4 5\n"


def make_graph(text: str) -> DirectedGraph:
    return load_edge_list(text.splitlines(keepends=True))


@pytest.fixture
def f1() -> DirectedGraph:
    return make_graph(F1_TEXT)


@pytest.fixture
def f2() -> DirectedGraph:
    return make_graph(F2_TEXT)


@pytest.fixture
def f3() -> DirectedGraph:
    return make_graph(F3_TEXT)


def random_graph(rng: random.Random, n: int, mean_degree: float) -> DirectedGraph:
    """Directed Erdos-Renyi graph with expected out-degree mean_degree."""
    p = min(1.0, mean_degree / max(1, n - 1))
    lines = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                lines.append(f"{u} {v}\n")
    return load_edge_list(lines)


def random_query(rng: random.Random, g: DirectedGraph, k: int) -> Query | None:
    """Any distinct (s, t) pair; reachability is not required."""
    if g.vertex_count < 2:
        return None
    s = rng.randrange(g.vertex_count)
    t = rng.randrange(g.vertex_count)
    while t == s:
        t = rng.randrange(g.vertex_count)
    return Query(s, t, k)
