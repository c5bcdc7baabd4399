import json

from ringlab.graph import build_graph, graph_from_edges, graph_to_dict, graph_to_dot
from ringlab.graph.export import SINK_COLOR, SOURCE_COLOR


def test_dict_of_z6(Z6):
    data = graph_to_dict(build_graph(Z6))
    assert data == {
        "vertices": [2, 3, 4],
        "edges": [[2, 3], [3, 2], [3, 4], [4, 3]],
        "loops": [],
        "sinks": [],
        "sources": [],
        "diameter": 2,
        "max_finite_distance": 2,
        "clique_number": 2,
    }


def test_infinite_diameter_is_a_string(T2):
    data = graph_to_dict(build_graph(T2))
    assert data["diameter"] == "inf"
    assert data["loops"] == [1]
    json.dumps(data)


def test_dot_marks_endpoints_and_loops(T2):
    dot = graph_to_dot(build_graph(T2))
    assert dot.startswith('digraph "Gamma(first_row(2,2))" {')
    assert dot.count(SINK_COLOR) == 2
    assert dot.count(SOURCE_COLOR) == 1
    assert '1 [label="(0,1)"' in dot
    assert "  1 -> 2;" in dot
    assert "  1 -> 1;" in dot
    assert dot.rstrip().endswith("}")


def test_dot_without_ring_uses_indices():
    G = graph_from_edges([1, 2], [(1, 2)])
    dot = graph_to_dot(G, title='a "quoted" title')
    assert 'digraph "a \\"quoted\\" title" {' in dot
    assert '2 [label="2"' in dot
