import json

import pytest

from ringlab.errors import BadEntry, NotAssociative
from ringlab.rings import dumps_ring, iter_rings, loads_ring, ring_from_dict, ring_to_dict


def test_dumps_is_one_sorted_line(T2):
    text = dumps_ring(T2)
    assert "\n" not in text
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data["order"] == 4
    assert data["label"] == "first_row(2,2)"
    assert data["names"][2] == "(1,0)"


def test_loads_restores_tables_and_names(T2):
    back = loads_ring(dumps_ring(T2))
    assert back == T2
    assert back.names == T2.names


def test_names_are_optional(Z6):
    assert "names" not in ring_to_dict(Z6)


def test_missing_tables():
    with pytest.raises(BadEntry):
        ring_from_dict({"order": 2, "add": [[0, 1], [1, 0]]})
    with pytest.raises(BadEntry):
        ring_from_dict([1, 2])


def test_declared_order_must_match():
    with pytest.raises(BadEntry):
        ring_from_dict({"order": 3, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]]})


def test_invalid_json():
    with pytest.raises(BadEntry):
        loads_ring("{not json")


def test_tables_are_revalidated():
    bad = {"add": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]}
    bad["mul"] = [[0, 0, 0, 0], [0, 2, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    with pytest.raises(NotAssociative):
        ring_from_dict(bad)


def test_iter_rings_accepts_lines_arrays_and_documents(T2, Z6):
    lines = dumps_ring(T2) + "\n\n" + dumps_ring(Z6) + "\n"
    assert list(iter_rings(lines)) == [T2, Z6]
    array = json.dumps([ring_to_dict(T2), ring_to_dict(Z6)])
    assert list(iter_rings(array)) == [T2, Z6]
    pretty = json.dumps(ring_to_dict(Z6), indent=2)
    assert list(iter_rings(pretty)) == [Z6]
    assert list(iter_rings("   \n")) == []
