import math

import pytest

from ringlab.errors import VertexNotInGraph
from ringlab.graph import (
    build_graph,
    clique_number,
    degree_report,
    distances,
    edge_count,
    graph_from_edges,
    graph_shape,
    is_network,
    reverse_graph,
    sinks,
    sources,
    strongly_connected,
    weakly_connected,
)
from ringlab.rings import cyclic_ring


class TestBuild:
    def test_z6(self, Z6):
        G = build_graph(Z6)
        assert G.vertices == (2, 3, 4)
        assert G.edges() == [(2, 3), (3, 2), (3, 4), (4, 3)]
        assert G.loops == frozenset()
        assert G.ring is Z6

    def test_t2(self, T2):
        G = build_graph(T2)
        assert G.vertices == (1, 2, 3)
        assert G.out_adj == {1: (2, 3), 2: (), 3: ()}
        assert G.in_adj == {1: (), 2: (1,), 3: (1,)}
        assert G.loops == {1}

    def test_field_has_empty_graph(self, F5):
        G = build_graph(F5)
        assert len(G) == 0
        assert G.edges() == []

    def test_null_ring_is_complete_with_loops(self, null22):
        G = build_graph(null22)
        assert len(G.edges()) == 6
        assert G.loops == {1, 2, 3}

    def test_reverse_is_graph_of_opposite(self, T2, T2op):
        assert reverse_graph(build_graph(T2)) == build_graph(T2op)

    def test_hand_built_graph_drops_self_edges(self):
        G = graph_from_edges([3, 1, 2], [(1, 2), (2, 2), (1, 3)])
        assert G.vertices == (1, 2, 3)
        assert G.edges() == [(1, 2), (1, 3)]
        assert G.ring is None


class TestMetrics:
    def test_endpoints_of_t2(self, T2):
        G = build_graph(T2)
        assert sinks(G) == {2, 3}
        assert sources(G) == {1}

    def test_isolated_loop_is_neither_sink_nor_source(self, null2):
        G = build_graph(null2)
        assert sinks(G) == frozenset()
        assert sources(G) == frozenset()

    def test_degree_report(self, T2):
        report = degree_report(build_graph(T2), 1)
        assert (report.out_simple, report.in_simple, report.has_loop) == (2, 0, True)
        assert report.out_with_loop == 3
        assert report.in_with_loop == 1
        with pytest.raises(VertexNotInGraph):
            degree_report(build_graph(T2), 0)

    def test_edge_count_conventions(self, T2, null22):
        assert edge_count(build_graph(T2)) == 2
        assert edge_count(build_graph(T2), "loop") == 3
        assert edge_count(build_graph(null22), "loop") == 9
        assert edge_count(build_graph(null22), "cycle") == 6
        assert edge_count(build_graph(T2), "cycle") == 2
        with pytest.raises(ValueError):
            edge_count(build_graph(T2), "multi")

    def test_distances_in_z6(self, Z6):
        dist = distances(build_graph(Z6))
        assert dist.d(2, 4) == 2
        assert dist.d(3, 3) == 0
        assert dist.diameter == 2
        assert dist.max_finite == 2

    def test_unreachable_pairs(self, T2):
        dist = distances(build_graph(T2))
        assert math.isinf(dist.d(2, 1))
        assert math.isinf(dist.diameter)
        assert dist.max_finite == 1

    def test_empty_graph_distances(self, F5):
        dist = distances(build_graph(F5))
        assert dist.diameter == 0
        assert dist.max_finite == 0

    def test_connectivity(self, Z6, T2, F5):
        assert strongly_connected(build_graph(Z6))
        assert not strongly_connected(build_graph(T2))
        assert weakly_connected(build_graph(T2))
        assert strongly_connected(build_graph(F5))

    def test_clique_number(self, Z6, T2, null22, F5):
        assert clique_number(build_graph(Z6)) == 2
        assert clique_number(build_graph(T2)) == 1
        assert clique_number(build_graph(null22)) == 3
        assert clique_number(build_graph(F5)) == 0

    def test_network(self, T2):
        G = graph_from_edges([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
        assert is_network(G)
        assert not is_network(graph_from_edges([1, 2, 3], [(1, 2), (1, 3)]))
        assert not is_network(build_graph(T2))


class TestShapes:
    def test_order_four_shapes(self, F2xF2, null22, square_path_ring, T2, T2op):
        assert graph_shape(build_graph(cyclic_ring(4))) == "K1"
        assert graph_shape(build_graph(F2xF2)) == "K2"
        assert graph_shape(build_graph(null22)) == "K3"
        assert graph_shape(build_graph(square_path_ring)) == "mutual-path"
        assert graph_shape(build_graph(T2)) == "out-star"
        assert graph_shape(build_graph(T2op)) == "in-star"

    def test_field_is_empty_shape(self, F5):
        assert graph_shape(build_graph(F5)) == "K0"

    def test_large_graph_has_no_shape(self, U3):
        assert graph_shape(build_graph(U3)) is None
