"""Degree, distance and shape queries on Γ(R).

Sinks, sources and distances use the loop-free graph.  Degree counts expose
both the loop-free value and the loop flag so numeric claims can be compared
under either convention.
"""

from __future__ import annotations

import logging

import networkx as nx
import numpy as np

from ..errors import VertexNotInGraph
from .types import DegreeReport, DistanceMatrix, ZdGraph

logger = logging.getLogger(__name__)

# "cycle" reads E(M, N) as every edge between M and N in either direction, so a
# mutual pair adds 2; on the whole graph it is the loop-free count
EDGE_CONVENTIONS = ("simple", "loop", "cycle")

# Graphs of rings with at most four elements, loops ignored.
_SHAPE_TEMPLATES: dict[str, nx.DiGraph] = {
    "K0": nx.DiGraph(),
    "K1": nx.complete_graph(1, create_using=nx.DiGraph),
    "K2": nx.complete_graph(2, create_using=nx.DiGraph),
    "K3": nx.complete_graph(3, create_using=nx.DiGraph),
    "mutual-path": nx.DiGraph([(0, 1), (1, 0), (1, 2), (2, 1)]),
    "in-star": nx.DiGraph([(0, 1), (2, 1)]),
    "out-star": nx.DiGraph([(1, 0), (1, 2)]),
}

# Listed graphs per ring order for rings with at most four elements.
LISTED_SHAPES: dict[int, tuple[str, ...]] = {
    2: ("K0", "K1"),
    3: ("K0", "K2"),
    4: ("K0", "K1", "K2", "K3", "mutual-path", "in-star", "out-star"),
}


def sinks(G: ZdGraph) -> frozenset[int]:
    """Vertices with positive in-degree and out-degree zero (loops not counted)."""
    incoming = G.in_adj
    return frozenset(v for v in G.vertices if not G.out_adj[v] and incoming[v])


def sources(G: ZdGraph) -> frozenset[int]:
    incoming = G.in_adj
    return frozenset(v for v in G.vertices if G.out_adj[v] and not incoming[v])


def degree_report(G: ZdGraph, x: int) -> DegreeReport:
    if x not in G.out_adj:
        raise VertexNotInGraph(f"{x} is not a vertex of the graph")
    return DegreeReport(
        vertex=x,
        out_simple=len(G.out_adj[x]),
        in_simple=len(G.in_adj[x]),
        has_loop=x in G.loops,
    )


def edge_count(G: ZdGraph, convention: str = "simple") -> int:
    """Directed edges (a mutual pair counts 2), with loops added under the ``loop`` convention."""
    if convention not in EDGE_CONVENTIONS:
        raise ValueError(f"unknown edge convention {convention!r}")
    total = sum(len(targets) for targets in G.out_adj.values())
    return total + len(G.loops) if convention == "loop" else total


def distances(G: ZdGraph) -> DistanceMatrix:
    """All-pairs directed BFS distances."""
    n = len(G.vertices)
    index = {v: i for i, v in enumerate(G.vertices)}
    matrix = np.full((n, n), np.inf)
    for source, lengths in nx.all_pairs_shortest_path_length(G.digraph):
        for target, length in lengths.items():
            matrix[index[source], index[target]] = length
    matrix.setflags(write=False)
    return DistanceMatrix(vertices=G.vertices, distances=matrix)


def strongly_connected(G: ZdGraph) -> bool:
    """Every ordered pair of vertices joined by a directed path; true for the empty graph."""
    if not G.vertices:
        return True
    return nx.is_strongly_connected(G.digraph)


def weakly_connected(G: ZdGraph) -> bool:
    if not G.vertices:
        return True
    return nx.is_weakly_connected(G.digraph)


def mutual_graph(G: ZdGraph) -> nx.Graph:
    """Undirected graph of pairs joined in both directions."""
    graph = nx.Graph()
    graph.add_nodes_from(G.vertices)
    graph.add_edges_from((x, y) for x, y in G.edges() if x < y and G.has_edge(y, x))
    return graph


def clique_number(G: ZdGraph) -> int:
    """Size of the largest vertex set with edges both ways between every pair."""
    if not G.vertices:
        return 0
    return max(len(clique) for clique in nx.find_cliques(mutual_graph(G)))


def is_network(G: ZdGraph) -> bool:
    """Exactly one sink ``k``, exactly one source ``c``, ``c -> v`` and ``v -> k`` for every other ``v``."""
    sink_set, source_set = sinks(G), sources(G)
    if len(sink_set) != 1 or len(source_set) != 1:
        return False
    (k,), (c,) = tuple(sink_set), tuple(source_set)
    others = [v for v in G.vertices if v != c]
    if not all(G.has_edge(c, v) for v in others):
        return False
    return all(G.has_edge(v, k) for v in G.vertices if v != k)


def graph_shape(G: ZdGraph) -> str | None:
    """Name of the listed small graph isomorphic to ``G`` (loops ignored), if any."""
    if len(G.vertices) > 3:
        return None
    for name, template in _SHAPE_TEMPLATES.items():
        if template.number_of_nodes() == len(G.vertices) and nx.is_isomorphic(
            template, G.digraph
        ):
            return name
    return None
