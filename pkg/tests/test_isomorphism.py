import numpy as np
import pytest
from conftest import relabel

from ringlab.rings import (
    canonical_form,
    cyclic_ring,
    direct_product,
    find_isomorphism,
    is_isomorphic,
    null_ring,
)
from ringlab.rings.isomorphism import additive_shape, fingerprint


def _is_ring_map(A, B, phi):
    return np.array_equal(phi[A.add], B.add[phi[:, None], phi[None, :]]) and np.array_equal(
        phi[A.mul], B.mul[phi[:, None], phi[None, :]]
    )


@pytest.mark.parametrize("perm", [[0, 2, 1, 3], [0, 3, 1, 2], [0, 1, 3, 2]])
def test_relabelled_ring_is_isomorphic(T2, perm):
    other = relabel(T2, perm)
    phi = find_isomorphism(T2, other)
    assert phi is not None
    assert _is_ring_map(T2, other, phi)


def test_opposite_is_not_isomorphic(T2, T2op):
    assert not is_isomorphic(T2, T2op)
    assert fingerprint(T2) != fingerprint(T2op)


def test_same_additive_group_different_products(F2xF2, null22, square_path_ring):
    assert not is_isomorphic(F2xF2, null22)
    assert not is_isomorphic(null22, square_path_ring)
    assert find_isomorphism(cyclic_ring(4), null22) is None


def test_order_mismatch():
    assert not is_isomorphic(cyclic_ring(4), cyclic_ring(5))


def test_chinese_remainder():
    assert is_isomorphic(direct_product(cyclic_ring(3), cyclic_ring(4)), cyclic_ring(12))
    assert not is_isomorphic(direct_product(cyclic_ring(2), cyclic_ring(6)), cyclic_ring(12))


def test_additive_shape(Z6, null22, U3):
    assert additive_shape(Z6).name == "Z6"
    assert additive_shape(null22).name == "Z2xZ2"
    assert additive_shape(U3).name == "Z3xZ3"


def test_canonical_form_is_a_class_invariant(U3):
    other = relabel(U3, [0, 4, 8, 3, 7, 2, 6, 1, 5])
    shape_a, table_a = canonical_form(U3)
    shape_b, table_b = canonical_form(other)
    assert shape_a == shape_b
    assert np.array_equal(table_a, table_b)


def test_canonical_form_separates_classes(T2, T2op):
    assert not np.array_equal(canonical_form(T2)[1], canonical_form(T2op)[1])


def test_canonical_form_of_trivial_ring():
    shape, table = canonical_form(null_ring([2]))
    assert shape.name == "Z2"
    assert table.tolist() == [[0, 0], [0, 0]]
