"""Ingestion, reverse views, and query sampling."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spg.graph import (
    EdgeListParseError,
    Query,
    QuerySampleError,
    load_edge_list,
    parse_query_file,
    reachable_within,
    reverse_view,
    sample_queries,
    serialize_edge_list,
    write_query_file,
)

from .conftest import F1_TEXT, make_graph


def test_f1_counts(f1):
    assert f1.vertex_count == 6
    assert f1.edge_count == 7
    assert f1.out_adjacency[0] == [1, 2]
    assert f1.in_adjacency[4] == [2, 3]


def test_comments_blanks_and_duplicates():
    text = "# header\n\n% another comment\n3 5\n3 5\n5 3\n7 7\n3   5\n"
    g = make_graph(text)
    # 7 7 is a self-loop: dropped as an edge, kept as an isolated vertex
    assert g.edge_count == 2
    assert g.labels == [3, 5, 7]
    assert g.out_adjacency[g.to_internal(3)] == [g.to_internal(5)]
    assert g.out_adjacency[g.to_internal(7)] == []


def test_dense_reindex_follows_label_order():
    g = make_graph("100 7\n7 50\n")
    assert g.labels == [7, 50, 100]
    assert g.to_internal(7) == 0
    assert g.to_label(2) == 100


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("1 2 3\n", "line 1"),
        ("1\n", "line 1"),
        ("a b\n", "not an integer"),
        ("1 -2\n", "negative"),
        ("1 2\nx 4\n", "line 2"),
        (f"1 {2**63}\n", "63 bits"),
    ],
)
def test_malformed_lines_name_their_line(text, fragment):
    with pytest.raises(EdgeListParseError) as excinfo:
        make_graph(text)
    assert fragment in str(excinfo.value)


def test_reverse_view_swaps_adjacency(f1):
    r = reverse_view(f1)
    assert r.out_adjacency is f1.in_adjacency
    assert r.in_adjacency is f1.out_adjacency
    assert reverse_view(r) == f1


def test_round_trip_is_identical(f1):
    again = make_graph(serialize_edge_list(f1))
    assert again == f1


def test_round_trip_keeps_self_loop_vertices():
    g = make_graph("1 2\n9 9\n")
    assert make_graph(serialize_edge_list(g)) == g


edge_lists = st.lists(
    st.tuples(st.integers(0, 15), st.integers(0, 15)), min_size=1, max_size=60
)


@settings(deadline=None, max_examples=120)
@given(edge_lists)
def test_adjacency_symmetry(pairs):
    g = load_edge_list([f"{u} {v}\n" for u, v in pairs])
    rebuilt: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u in range(g.vertex_count):
        for v in g.out_adjacency[u]:
            rebuilt[v].append(u)
    assert [sorted(x) for x in rebuilt] == g.in_adjacency
    for adjacency in (g.out_adjacency, g.in_adjacency):
        for neighbors in adjacency:
            assert neighbors == sorted(neighbors)
            assert len(neighbors) == len(set(neighbors))


@settings(deadline=None, max_examples=120)
@given(edge_lists)
def test_ingestion_idempotence(pairs):
    g = load_edge_list([f"{u} {v}\n" for u, v in pairs])
    text = serialize_edge_list(g)
    again = load_edge_list(text.splitlines(keepends=True))
    assert again == g
    assert serialize_edge_list(again) == text


def test_query_validation():
    with pytest.raises(ValueError):
        Query(3, 3, 2)
    with pytest.raises(ValueError):
        Query(0, 1, 0)
    with pytest.raises(ValueError):
        Query(0, 1, 256)
    assert Query(0, 1, 255).k == 255


def test_sample_queries_deterministic_and_valid(f1):
    first = sample_queries(f1, 3, 5, seed=42)
    second = sample_queries(f1, 3, 5, seed=42)
    assert first == second
    assert len({(q.s, q.t) for q in first}) == 5
    for q in first:
        assert q.t in reachable_within(f1, q.s, q.k)
        assert q.s != q.t


def test_sample_queries_different_seed_differs(f1):
    a = sample_queries(f1, 3, 8, seed=1)
    b = sample_queries(f1, 3, 8, seed=2)
    assert a != b


def test_sample_queries_insufficient_pairs(f1):
    # at k=1 only the 7 edges qualify as (s, t) pairs
    with pytest.raises(QuerySampleError) as excinfo:
        sample_queries(f1, 1, 10, seed=0)
    assert excinfo.value.found == 7
    assert excinfo.value.requested == 10
    assert "7 of 10" in str(excinfo.value)


def test_sample_queries_respects_hop_budget():
    rng = random.Random(7)
    from .conftest import random_graph

    for trial in range(20):
        g = random_graph(rng, rng.randint(3, 20), rng.uniform(0.5, 3))
        if g.vertex_count < 2:
            continue
        k = rng.randint(1, 6)
        try:
            queries = sample_queries(g, k, 4, seed=trial)
        except QuerySampleError:
            continue
        for q in queries:
            assert q.t in reachable_within(g, q.s, k)


def test_query_file_round_trip(f1):
    queries = sample_queries(f1, 4, 4, seed=9)
    text = write_query_file(queries, f1)
    assert text.count("\n") == 4
    assert parse_query_file(text.splitlines(keepends=True), f1) == queries


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("0 5\n", "expected"),
        ("0\t5\tx\n", "not an integer"),
        ("0\t99\t3\n", "does not occur"),
        ("4\t4\t3\n", "distinct"),
    ],
)
def test_query_file_errors(f1, line, fragment):
    with pytest.raises(EdgeListParseError) as excinfo:
        parse_query_file([line], f1)
    assert fragment in str(excinfo.value)
    assert "line 1" in str(excinfo.value)


def test_query_file_accepts_comments(f1):
    queries = parse_query_file(["# a comment\n", "\n", "0\t5\t4\n"], f1)
    assert queries == [Query(0, 5, 4)]
