from .build import build_graph, graph_from_edges, reverse_graph
from .endpoints import (
    claimed_edge_count,
    endpoint_sets,
    identity_semigroup,
    semigroup_closure_check,
    strongly_left_invertible,
    strongly_right_invertible,
)
from .export import graph_to_dict, graph_to_dot
from .metrics import (
    clique_number,
    degree_report,
    distances,
    edge_count,
    graph_shape,
    is_network,
    sinks,
    sources,
    strongly_connected,
    weakly_connected,
)
from .types import DegreeReport, DistanceMatrix, EdgeCount, EndpointSets, SemigroupCheck, ZdGraph

__all__ = [
    "DegreeReport",
    "DistanceMatrix",
    "EdgeCount",
    "EndpointSets",
    "SemigroupCheck",
    "ZdGraph",
    "build_graph",
    "claimed_edge_count",
    "clique_number",
    "degree_report",
    "distances",
    "edge_count",
    "endpoint_sets",
    "graph_from_edges",
    "graph_shape",
    "graph_to_dict",
    "graph_to_dot",
    "identity_semigroup",
    "is_network",
    "reverse_graph",
    "semigroup_closure_check",
    "sinks",
    "sources",
    "strongly_connected",
    "strongly_left_invertible",
    "strongly_right_invertible",
    "weakly_connected",
]
