"""Exact hop-constrained s-t simple path graph queries on directed graphs."""

from .distance import (
    INFINITY,
    DistanceField,
    adaptive_bidirectional_distances,
    k_hop_subgraph,
)
from .essential import (
    BACKWARD,
    FORWARD,
    EssentialVertexTable,
    ev_exists,
    propagate,
)
from .graph import (
    DirectedGraph,
    EdgeListParseError,
    Query,
    QuerySampleError,
    load_edge_list,
    load_graph,
    parse_query_file,
    reverse_view,
    sample_queries,
    serialize_edge_list,
    write_query_file,
)
from .labeling import BoundaryIndex, UpperBoundGraph, build_upper_bound, label_edge
from .oracle import (
    DEFAULT_PATH_LIMIT,
    Metrics,
    PathLimitError,
    PathSet,
    brute_ev,
    compute_metrics,
    enumerate_simple_paths,
    oracle_spg,
    write_paths,
)
from .pipeline import PipelineOptions, answer_query, upper_bound_graph
from .verify import SimplePathGraph, SpgStats, order_adjacency, verify_undetermined

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "DistanceField",
    "adaptive_bidirectional_distances",
    "k_hop_subgraph",
    "BACKWARD",
    "FORWARD",
    "EssentialVertexTable",
    "ev_exists",
    "propagate",
    "DirectedGraph",
    "EdgeListParseError",
    "Query",
    "QuerySampleError",
    "load_edge_list",
    "load_graph",
    "parse_query_file",
    "reverse_view",
    "sample_queries",
    "serialize_edge_list",
    "write_query_file",
    "BoundaryIndex",
    "UpperBoundGraph",
    "build_upper_bound",
    "label_edge",
    "DEFAULT_PATH_LIMIT",
    "Metrics",
    "PathLimitError",
    "PathSet",
    "brute_ev",
    "compute_metrics",
    "enumerate_simple_paths",
    "oracle_spg",
    "write_paths",
    "PipelineOptions",
    "answer_query",
    "upper_bound_graph",
    "SimplePathGraph",
    "SpgStats",
    "order_adjacency",
    "verify_undetermined",
]
