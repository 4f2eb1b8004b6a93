"""Label candidate edges and assemble the upper-bound graph.

Labels: 2 = definite (provably on some qualifying path), 1 =
undetermined (may be on one, needs verification), 0 = failing.  The
label-1 and label-2 edges together form the upper-bound graph, a
superset of the answer that is exact for k <= 4.

While the two-hop definite rules fire, the endpoints they certify are
recorded as departures (second path vertex after s) and arrivals
(second-to-last before t) together with their witness neighbors; the
verification stage later extends interior segments through them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .distance import DistanceField, k_hop_subgraph
from .essential import EssentialVertexTable
from .graph import DirectedGraph, Query


@dataclass
class BoundaryIndex:
    """Departure/arrival vertices and their capped witness lists.

    in_d[v] holds in-neighbors x of departure v with definite e(s, x) and
    e(x, v); out_a[u] holds out-neighbors y of arrival u with definite
    e(u, y) and e(y, t).  Lists keep first-come order of the sorted
    candidate-edge scan and are truncated at k - 2 entries, which is
    always enough for the verification search to pick a valid extension.
    """

    departures: set[int] = field(default_factory=set)
    arrivals: set[int] = field(default_factory=set)
    in_d: dict[int, list[int]] = field(default_factory=dict)
    out_a: dict[int, list[int]] = field(default_factory=dict)


@dataclass
class UpperBoundGraph:
    """Candidate edges with labels, plus adjacency over label-{1,2} edges."""

    query: Query
    candidate_edges: list[tuple[int, int]]
    labels: dict[tuple[int, int], int]
    definite_edges: list[tuple[int, int]]
    undetermined_edges: list[tuple[int, int]]
    out_adjacency: dict[int, list[int]]
    in_adjacency: dict[int, list[int]]

    def label_count(self, label: int) -> int:
        if label == 2:
            return len(self.definite_edges)
        if label == 1:
            return len(self.undetermined_edges)
        return len(self.candidate_edges) - len(self.definite_edges) - len(
            self.undetermined_edges
        )

    def selected_edge_count(self) -> int:
        """Number of edges kept in the upper bound (label 1 or 2)."""
        return len(self.definite_edges) + len(self.undetermined_edges)

    def selected_edges(self) -> list[tuple[int, int]]:
        return sorted(self.definite_edges + self.undetermined_edges)


def _classify(
    u: int,
    v: int,
    q: Query,
    fwd: EssentialVertexTable,
    bwd: EssentialVertexTable,
) -> tuple[int, bool, bool]:
    """Label one candidate edge; also report which two-hop rules held.

    Returns (label, departure_rule, arrival_rule).  Both two-hop rules
    are always evaluated: an edge can simultaneously certify its head as
    a departure and its tail as an arrival, and dropping either record
    would leave the verification stage blind to valid extensions.
    """
    s, t, k = q.s, q.t, q.k
    if u == s:
        return (2 if bwd.get(v, k - 1) is not None else 0), False, False
    if v == t:
        return (2 if fwd.get(u, k - 1) is not None else 0), False, False

    departure_rule = False
    arrival_rule = False
    if k >= 2:
        first_hop = fwd.get(u, 1)
        if first_hop is not None:
            tail_scope = bwd.get(v, k - 2)
            if tail_scope is not None and u not in tail_scope:
                departure_rule = True
        last_hop = bwd.get(v, 1)
        if last_hop is not None:
            head_scope = fwd.get(u, k - 2)
            if head_scope is not None and v not in head_scope:
                arrival_rule = True
    if departure_rule or arrival_rule:
        return 2, departure_rule, arrival_rule

    # Probe balanced splits only: with a forward budget of k_f the widest
    # usable backward budget is k - k_f - 1, and a set that is disjoint
    # at a smaller backward budget stays disjoint at the wider one.
    for k_f in range(2, k - 2):
        head = fwd.get(u, k_f)
        if head is None:
            continue
        tail = bwd.get(v, k - k_f - 1)
        if tail is None:
            continue
        if not head & tail:
            return 1, False, False
    return 0, False, False


def label_edge(
    u: int,
    v: int,
    q: Query,
    fwd: EssentialVertexTable,
    bwd: EssentialVertexTable,
) -> int:
    """Label a single candidate edge: 2 definite, 1 undetermined, 0 failing."""
    label, _, _ = _classify(u, v, q, fwd, bwd)
    return label


def build_upper_bound(
    g: DirectedGraph,
    q: Query,
    d: DistanceField,
    fwd: EssentialVertexTable,
    bwd: EssentialVertexTable,
    *,
    boundary_cap: bool = True,
) -> tuple[UpperBoundGraph, BoundaryIndex]:
    """Label every candidate edge and collect the boundary index.

    Candidates are scanned in ascending (u, v) order, so witness lists
    and adjacency lists come out deterministic.  boundary_cap=False
    disables the k - 2 truncation of witness lists (the result must not
    change; the cap only bounds memory).
    """
    candidates = k_hop_subgraph(g, q, d)
    cap = q.k - 2 if boundary_cap else None
    boundary = BoundaryIndex()
    labels: dict[tuple[int, int], int] = {}
    definite: list[tuple[int, int]] = []
    undetermined: list[tuple[int, int]] = []
    out_adjacency: dict[int, list[int]] = {}
    in_adjacency: dict[int, list[int]] = {}

    for u, v in candidates:
        label, departure_rule, arrival_rule = _classify(u, v, q, fwd, bwd)
        labels[(u, v)] = label
        if label == 0:
            continue
        if label == 2:
            definite.append((u, v))
        else:
            undetermined.append((u, v))
        out_adjacency.setdefault(u, []).append(v)
        in_adjacency.setdefault(v, []).append(u)
        if departure_rule:
            witnesses = boundary.in_d.setdefault(v, [])
            if cap is None or len(witnesses) < cap:
                witnesses.append(u)
            boundary.departures.add(v)
        if arrival_rule:
            witnesses = boundary.out_a.setdefault(u, [])
            if cap is None or len(witnesses) < cap:
                witnesses.append(v)
            boundary.arrivals.add(u)

    ub = UpperBoundGraph(
        query=q,
        candidate_edges=candidates,
        labels=labels,
        definite_edges=definite,
        undetermined_edges=undetermined,
        out_adjacency=out_adjacency,
        in_adjacency=in_adjacency,
    )
    return ub, boundary
