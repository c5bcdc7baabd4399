import numpy as np
import pytest

from ringlab.rings.groups import (
    abelian_group_shapes,
    automorphisms,
    coordinates,
    element_order_counts,
    encode,
    group_add_table,
    shape_for_orders,
)


def _names(n):
    return [shape.name for shape in abelian_group_shapes(n)]


def test_shapes_are_listed_cyclic_first():
    assert _names(1) == ["0"]
    assert _names(4) == ["Z4", "Z2xZ2"]
    assert _names(8) == ["Z8", "Z2xZ4", "Z2xZ2xZ2"]
    assert _names(12) == ["Z12", "Z2xZ6"]


def test_shape_counts_follow_partitions():
    # p^4 has five abelian groups, p^2 q^2 has four
    assert len(abelian_group_shapes(16)) == 5
    assert len(abelian_group_shapes(36)) == 4
    assert len(abelian_group_shapes(30)) == 1


def test_invariant_factors_form_a_divisor_chain():
    for shape in abelian_group_shapes(72):
        factors = shape.invariant_factors
        assert shape.order == 72
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


def test_non_positive_order_is_rejected():
    with pytest.raises(ValueError):
        abelian_group_shapes(0)


def test_coordinates_and_encode_agree():
    moduli = (2, 3)
    coords = coordinates(moduli)
    assert coords.tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]
    assert encode(coords, moduli).tolist() == list(range(6))
    assert int(encode(np.array([3, 4]), moduli)) == 1 * 3 + 1


def test_group_add_table_of_klein_group():
    table = group_add_table((2, 2))
    assert table.tolist() == [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def test_element_order_counts():
    assert element_order_counts((4,)) == {1: 1, 2: 1, 4: 2}
    assert element_order_counts((2, 2)) == {1: 1, 2: 3}


def test_shape_for_orders():
    assert shape_for_orders({1: 1, 2: 3}, 4).name == "Z2xZ2"
    with pytest.raises(ValueError):
        shape_for_orders({1: 1, 3: 3}, 4)


@pytest.mark.parametrize(
    ("order", "index", "count"),
    [(4, 0, 2), (4, 1, 6), (8, 2, 168), (9, 1, 48), (5, 0, 4)],
)
def test_automorphism_counts(order, index, count):
    shape = abelian_group_shapes(order)[index]
    perms = automorphisms(shape)
    assert len(perms) == count
    # each row is a permutation fixing 0
    assert np.all(np.sort(perms, axis=1) == np.arange(order))
    assert np.all(perms[:, 0] == 0)


def test_automorphisms_respect_addition():
    shape = abelian_group_shapes(8)[1]
    add = group_add_table(shape.invariant_factors)
    for perm in automorphisms(shape):
        assert np.array_equal(perm[add], add[perm[:, None], perm[None, :]])
