from .builders import (
    cyclic_ring,
    decompose,
    decompose_right,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    null_ring,
    quotient_ring,
    subring,
)
from .core import (
    element_sets,
    is_commutative,
    left_annihilator,
    opposite_ring,
    right_annihilator,
    validate_ring,
)
from .enumeration import enumerate_order, enumerate_rings
from .groups import abelian_group_shapes
from .isomorphism import canonical_form, find_isomorphism, is_isomorphic
from .oracle import oracle_classes
from .serialize import dumps_ring, iter_rings, loads_ring, ring_from_dict, ring_to_dict
from .types import (
    AdditiveGroupShape,
    ElementSets,
    EnumerationStats,
    EnumerationTask,
    FiniteRing,
    LeftIdentityDecomposition,
)

__all__ = [
    "AdditiveGroupShape",
    "ElementSets",
    "EnumerationStats",
    "EnumerationTask",
    "FiniteRing",
    "LeftIdentityDecomposition",
    "abelian_group_shapes",
    "canonical_form",
    "cyclic_ring",
    "decompose",
    "decompose_right",
    "direct_product",
    "dumps_ring",
    "element_sets",
    "enumerate_order",
    "enumerate_rings",
    "find_isomorphism",
    "first_row_ring",
    "full_matrix_ring",
    "is_commutative",
    "is_isomorphic",
    "iter_rings",
    "left_annihilator",
    "loads_ring",
    "null_ring",
    "opposite_ring",
    "oracle_classes",
    "quotient_ring",
    "right_annihilator",
    "ring_from_dict",
    "ring_to_dict",
    "subring",
    "validate_ring",
]
