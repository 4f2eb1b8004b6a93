"""Layered propagation of essential vertex sets.

For the forward direction, the layer-l entry of vertex u is the
intersection of the vertex sets of all (not necessarily simple) s -> u
walks of at most l edges that avoid t; the backward direction mirrors
this from t over reversed edges, avoiding s.  These intersections agree
with the ones taken over simple paths only, which is what makes them
usable for edge labeling.

An entry can be absent either because no qualifying walk exists or
because pruning cut it; the two cases are deliberately not
distinguished, since pruned entries can never influence a label.
"""
from __future__ import annotations

from dataclasses import dataclass

from .distance import INFINITY, DistanceField
from .graph import DirectedGraph, Query, reverse_view

FORWARD = "forward"
BACKWARD = "backward"


@dataclass
class EssentialVertexTable:
    """Per-layer optional vertex sets for one direction of one query.

    layers[l][v] is a frozenset (the essential set) or None (absent).
    Layers share set objects where a layer inherited the previous one.
    """

    query: Query
    direction: str
    layers: list[list[frozenset[int] | None]]

    def get(self, vertex: int, layer: int) -> frozenset[int] | None:
        if not 0 <= layer < self.query.k:
            raise ValueError(f"layer {layer} outside [0, {self.query.k - 1}]")
        return self.layers[layer][vertex]


def ev_exists(
    table: EssentialVertexTable, vertex: int, layer: int
) -> frozenset[int] | None:
    """The essential set at (vertex, layer), or None when absent."""
    return table.get(vertex, layer)


def propagate(
    g: DirectedGraph,
    q: Query,
    d: DistanceField,
    direction: str,
    *,
    pruning: bool = True,
) -> EssentialVertexTable:
    """Fill layers 0..k-1 of the essential vertex table for one direction.

    Layer 0 holds only the start vertex.  At layer l every vertex x with
    a present layer-(l-1) entry relaxes each out-neighbor y outside
    {start, excluded}: the first write stores entry(x) | {y}, later
    writes intersect.  Vertices untouched at layer l inherit their
    layer-(l-1) entry by reference.

    With pruning on, a relaxation or inheritance of y at layer l is
    skipped when l plus the remaining distance on the far side exceeds k;
    such entries can never contribute to a label, and skipping them also
    silences their whole downstream cone.
    """
    if direction == FORWARD:
        adjacency = g.out_adjacency
        start, excluded = q.s, q.t
        far_side = d.dist_to_t
    elif direction == BACKWARD:
        adjacency = reverse_view(g).out_adjacency
        start, excluded = q.t, q.s
        far_side = d.dist_from_s
    else:
        raise ValueError(f"unknown direction: {direction!r}")

    n = g.vertex_count
    k = q.k
    base: list[frozenset[int] | None] = [None] * n
    base[start] = frozenset({start})
    layers = [base]
    present = [start]

    for level in range(1, k):
        previous = layers[-1]
        current: list[frozenset[int] | None] = [None] * n
        relaxed: list[int] = []
        for x in present:
            entry_x = previous[x]
            for y in adjacency[x]:
                if y == start or y == excluded:
                    continue
                if pruning and level + far_side[y] > k:
                    continue
                entry_y = current[y]
                if entry_y is None:
                    current[y] = entry_x | {y}
                    relaxed.append(y)
                else:
                    current[y] = entry_y & (entry_x | {y})
        next_present = relaxed
        for u in present:
            if current[u] is None:
                if pruning and level + far_side[u] > k:
                    continue
                current[u] = previous[u]
                next_present.append(u)
        next_present.sort()
        present = next_present
        layers.append(current)

    return EssentialVertexTable(query=q, direction=direction, layers=layers)
