import numpy as np
import pytest

from ringlab.errors import (
    BadEntry,
    IndexOutOfRange,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
    RingLabError,
)
from ringlab.rings.core import (
    additive_orders,
    element_sets,
    is_additive_subgroup,
    is_commutative,
    left_annihilator,
    left_identities,
    opposite_ring,
    product_set,
    right_annihilator,
    right_identities,
    validate_ring,
)

Z2_ADD = [[0, 1], [1, 0]]
Z3_ADD = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
Z4_ADD = [[(i + j) % 4 for j in range(4)] for i in range(4)]


class TestValidateRing:
    def test_accepts_cyclic_tables(self):
        R = validate_ring(Z3_ADD, [[(i * j) % 3 for j in range(3)] for i in range(3)], label="Z/3")
        assert R.order == 3
        assert R.label == "Z/3"
        assert R.neg.tolist() == [0, 2, 1]

    def test_tables_are_read_only(self):
        R = validate_ring(Z2_ADD, [[0, 0], [0, 1]])
        with pytest.raises(ValueError):
            R.mul[1, 1] = 0

    def test_entry_out_of_range(self):
        with pytest.raises(BadEntry) as info:
            validate_ring(Z2_ADD, [[0, 0], [0, 5]])
        assert info.value.witness == (1, 1)

    def test_non_square_table(self):
        with pytest.raises(BadEntry):
            validate_ring([[0, 1]], [[0, 0]])

    def test_mismatched_names(self):
        with pytest.raises(BadEntry):
            validate_ring(Z2_ADD, [[0, 0], [0, 1]], names=("0",))

    def test_non_commutative_addition(self):
        add = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
        with pytest.raises(NotAbelianGroup):
            validate_ring(add, np.zeros((3, 3), dtype=int))

    def test_zero_not_identity(self):
        with pytest.raises(NotAbelianGroup) as info:
            validate_ring([[1, 0], [0, 1]], [[0, 0], [0, 0]])
        assert info.value.witness[0] == 0

    def test_non_associative_product(self):
        mul = [[0, 0, 0, 0], [0, 2, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
        with pytest.raises(NotAssociative) as info:
            validate_ring(Z4_ADD, mul)
        assert info.value.witness == (1, 1, 1)

    def test_zero_row_must_vanish(self):
        with pytest.raises(NotDistributive) as info:
            validate_ring(Z2_ADD, [[0, 1], [0, 0]])
        assert info.value.witness == (0, 1, 0)

    def test_non_distributive_product(self):
        mul = [[0, 0, 0], [0, 1, 1], [0, 1, 1]]
        with pytest.raises(NotDistributive):
            validate_ring(Z3_ADD, mul)

    def test_validation_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            validate_ring(Z2_ADD, [[0, 0], [0, 9]])
        assert issubclass(NotAssociative, RingLabError)


class TestElementQueries:
    def test_annihilators_of_t2(self, T2):
        assert left_annihilator(T2, 2) == {0, 1}
        assert right_annihilator(T2, 1) == {0, 1, 2, 3}
        assert right_annihilator(T2, 2) == {0}

    def test_annihilator_index_checked(self, T2):
        with pytest.raises(IndexOutOfRange):
            left_annihilator(T2, 4)
        with pytest.raises(IndexOutOfRange):
            right_annihilator(T2, -1)

    def test_one_sided_identities_of_t2(self, T2, T2op):
        assert left_identities(T2) == {2, 3}
        assert right_identities(T2) == frozenset()
        assert right_identities(T2op) == {2, 3}

    def test_element_sets_of_t2(self, T2):
        sets = element_sets(T2)
        assert sets.left_zero_divisors == {1}
        assert sets.right_zero_divisors == {1, 2, 3}
        assert sets.zero_divisors == {1, 2, 3}
        assert sets.two_sided_identity is None
        assert sets.proper_left_identities == {2, 3}
        assert not sets.identities_two_sided

    def test_element_sets_of_unital_ring(self, Z6):
        sets = element_sets(Z6)
        assert sets.two_sided_identity == 1
        assert sets.proper_left_identities == frozenset()
        assert sets.identities_two_sided
        assert sets.zero_divisors == {2, 3, 4}

    def test_field_has_no_zero_divisors(self, F5):
        assert element_sets(F5).zero_divisors == frozenset()

    def test_left_zero_divisors_are_right_ones_in_commutative_ring(self, Z6):
        sets = element_sets(Z6)
        assert sets.left_zero_divisors == sets.right_zero_divisors

    def test_commutativity(self, Z6, T2):
        assert is_commutative(Z6)
        assert not is_commutative(T2)

    def test_additive_orders(self, Z6, null22):
        assert additive_orders(Z6).tolist() == [1, 6, 3, 2, 3, 6]
        assert additive_orders(null22).tolist() == [1, 2, 2, 2]

    def test_product_set(self, T2):
        assert product_set(T2, [1], [1, 2, 3]) == {0}
        assert product_set(T2, [2], [1, 2, 3]) == {1, 2, 3}
        assert product_set(T2, [], [1]) == frozenset()

    def test_additive_subgroup(self, Z6):
        assert is_additive_subgroup(Z6, frozenset({0, 2, 4}))
        assert not is_additive_subgroup(Z6, frozenset({0, 2}))
        assert not is_additive_subgroup(Z6, frozenset({3}))


class TestOppositeRing:
    def test_involution(self, T2):
        back = opposite_ring(opposite_ring(T2))
        assert back == T2
        assert back.label == T2.label

    def test_label(self, T2):
        assert opposite_ring(T2).label == "op(first_row(2,2))"

    def test_transposes_multiplication(self, T2, T2op):
        assert np.array_equal(T2op.mul, T2.mul.T)
        assert np.array_equal(T2op.add, T2.add)

    def test_commutative_ring_is_its_own_opposite(self, Z6):
        assert opposite_ring(Z6) == Z6
