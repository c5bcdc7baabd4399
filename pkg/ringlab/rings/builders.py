"""Named ring families and structural constructions.

Every builder returns a ring that went through ``validate_ring``.  Families
that can grow quickly (matrices, products) respect ``LabConfig.builder_cap``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

import numpy as np
from sympy import isprime

from ..config import LabConfig
from ..errors import (
    BadDimensions,
    EmptyFactorList,
    InternalInvariantViolation,
    NotAnIdeal,
    NotASubring,
    NotLeftIdentity,
    NotPrime,
    TooLarge,
)
from .core import (
    is_additive_subgroup,
    left_identities,
    opposite_ring,
    product_set,
    validate_ring,
)
from .groups import coordinates, encode, group_add_table
from .types import FiniteRing, LeftIdentityDecomposition

logger = logging.getLogger(__name__)


def _cap(config: LabConfig | None) -> int:
    return (config or LabConfig.from_env()).builder_cap


def _check_size(order: int, what: str, config: LabConfig | None) -> None:
    cap = _cap(config)
    if order > cap:
        raise TooLarge(f"{what} has {order} elements, above the builder cap of {cap}")


def cyclic_ring(n: int) -> FiniteRing:
    """``Z/nZ``."""
    if n < 1:
        raise BadDimensions(f"modulus must be positive, got {n}")
    elements = np.arange(n)
    add = (elements[:, None] + elements[None, :]) % n
    mul = (elements[:, None] * elements[None, :]) % n
    return validate_ring(add, mul, label=f"Z/{n}")


def null_ring(invariant_factors: Sequence[int], config: LabConfig | None = None) -> FiniteRing:
    """``Z/d_1 + ... + Z/d_k`` with every product zero."""
    factors = tuple(int(d) for d in invariant_factors)
    if not factors:
        raise EmptyFactorList("null_ring needs at least one cyclic factor")
    if any(d < 2 for d in factors):
        raise BadDimensions(f"cyclic factors must be at least 2, got {list(factors)}")
    n = int(np.prod(factors, dtype=np.int64))
    _check_size(n, "null ring", config)
    add = group_add_table(factors)
    label = "null[" + ",".join(str(d) for d in factors) + "]"
    return validate_ring(add, np.zeros_like(add), label=label)


def first_row_ring(k: int, n: int, config: LabConfig | None = None) -> FiniteRing:
    """k-by-k matrices over ``Z/n`` that vanish outside the first row.

    Element indices are the base-n digits of the first row, the (1,1) entry
    most significant.  The product of rows ``v`` and ``w`` is ``v_1 * w``.
    """
    if k < 2 or n < 2:
        raise BadDimensions(f"first_row_ring needs k >= 2 and n >= 2, got k={k}, n={n}")
    moduli = (n,) * k
    order = n**k
    _check_size(order, f"first_row_ring({k}, {n})", config)
    coords = coordinates(moduli)
    add = group_add_table(moduli)
    mul = encode(coords[:, 0][:, None, None] * coords[None, :, :], moduli)
    names = tuple("(" + ",".join(str(int(c)) for c in row) + ")" for row in coords)
    return validate_ring(add, mul, label=f"first_row({k},{n})", names=names)


def full_matrix_ring(k: int, q: int, config: LabConfig | None = None) -> FiniteRing:
    """``M_k(F_q)`` for a prime ``q``; indices are row-major base-q entries."""
    if k < 2:
        raise BadDimensions(f"matrix size must be at least 2, got {k}")
    if not isprime(q):
        raise NotPrime(f"full_matrix_ring supports prime fields only, {q} is not prime")
    order = q ** (k * k)
    _check_size(order, f"M_{k}(F_{q})", config)
    moduli = (q,) * (k * k)
    flat = coordinates(moduli)
    matrices = flat.reshape(order, k, k)
    add = group_add_table(moduli)
    mul = np.empty((order, order), dtype=np.int64)
    for i in range(order):
        products = np.einsum("ab,nbc->nac", matrices[i], matrices) % q
        mul[i] = encode(products.reshape(order, k * k), moduli)
    names = tuple(
        "[" + ";".join(" ".join(str(int(v)) for v in row) for row in m) + "]" for m in matrices
    )
    return validate_ring(add, mul, label=f"M_{k}(F_{q})", names=names)


def direct_product(A: FiniteRing, B: FiniteRing, config: LabConfig | None = None) -> FiniteRing:
    """Componentwise ring on ``A x B``; the pair ``(a, b)`` has index ``a*|B| + b``."""
    order = A.order * B.order
    _check_size(order, f"{A.label} x {B.label}", config)
    nb = B.order
    add = (A.add[:, None, :, None] * nb + B.add[None, :, None, :]).reshape(order, order)
    mul = (A.mul[:, None, :, None] * nb + B.mul[None, :, None, :]).reshape(order, order)
    names = ()
    if A.names or B.names:
        names = tuple(f"({A.name(a)},{B.name(b)})" for a in range(A.order) for b in range(nb))
    return validate_ring(add, mul, label=f"{A.label} x {B.label}", names=names)


def subring(R: FiniteRing, elements: Iterable[int], label: str | None = None) -> FiniteRing:
    """Restrict ``R`` to a subset closed under ``+`` and ``*``.

    The subset is reindexed in increasing order of the original indices, so
    0 stays 0.
    """
    members = sorted({int(x) for x in elements})
    member_set = frozenset(members)
    if not is_additive_subgroup(R, member_set):
        raise NotASubring(f"{members} is not an additive subgroup of {R.label}")
    if not product_set(R, members, members) <= member_set:
        raise NotASubring(f"{members} is not closed under multiplication in {R.label}")
    index = np.full(R.order, -1, dtype=np.int64)
    index[members] = np.arange(len(members))
    idx = np.asarray(members, dtype=np.int64)
    add = index[R.add[np.ix_(idx, idx)]]
    mul = index[R.mul[np.ix_(idx, idx)]]
    names = tuple(R.names[x] for x in members) if R.names else ()
    return validate_ring(add, mul, label=label or f"sub({R.label})", names=names)


def _is_two_sided_ideal(R: FiniteRing, ideal: frozenset[int]) -> bool:
    everything = range(R.order)
    return (
        is_additive_subgroup(R, ideal)
        and product_set(R, everything, ideal) <= ideal
        and product_set(R, ideal, everything) <= ideal
    )


def quotient_ring(R: FiniteRing, ideal: Iterable[int]) -> FiniteRing:
    """``R / I`` with the smallest index of each coset as its representative."""
    ideal = frozenset(int(x) for x in ideal)
    if not _is_two_sided_ideal(R, ideal):
        raise NotAnIdeal(f"{sorted(ideal)} is not a two-sided ideal of {R.label}")
    members = np.fromiter(sorted(ideal), dtype=np.int64)
    representative = R.add[:, members].min(axis=1)
    reps = np.unique(representative)
    index = np.full(R.order, -1, dtype=np.int64)
    index[reps] = np.arange(reps.size)
    coset_of = index[representative]
    add = coset_of[R.add[np.ix_(reps, reps)]]
    mul = coset_of[R.mul[np.ix_(reps, reps)]]
    names = tuple(f"{R.name(int(r))}+I" for r in reps) if R.names else ()
    return validate_ring(add, mul, label=f"{R.label}/I", names=names)


def decompose(R: FiniteRing, e: int) -> LeftIdentityDecomposition:
    """Split ``R = R_e (+) I_e`` for a left identity ``e`` and verify the four structural claims.

    ``I_e = {a : ae = 0}`` is a two-sided ideal (with at least two elements when
    ``e`` is proper), ``R_e = {a : ae = a}`` is a subring with identity ``e``,
    every element splits uniquely as ``re + (r - re)``, and ``R_e`` is
    isomorphic to ``R / I_e``.  A failed claim raises
    :class:`~ringlab.errors.InternalInvariantViolation`.
    """
    return _decompose(R, e, side="left")


def decompose_right(R: FiniteRing, e: int) -> LeftIdentityDecomposition:
    """Mirror of :func:`decompose` for a right identity ``e``, via the opposite ring."""
    return _decompose(opposite_ring(R), e, side="right")


def _decompose(R: FiniteRing, e: int, side: str) -> LeftIdentityDecomposition:
    from .isomorphism import is_isomorphic

    if not 0 <= int(e) < R.order or int(e) not in left_identities(R):
        raise NotLeftIdentity(f"{e} is not a {side} identity of {R.label}")
    e = int(e)
    column = R.mul[:, e]
    elements = np.arange(R.order)
    ideal = frozenset(int(a) for a in np.flatnonzero(column == 0))
    sub = frozenset(int(a) for a in np.flatnonzero(column == elements))
    two_sided = bool(np.array_equal(column, elements))

    def violated(claim: str) -> InternalInvariantViolation:
        return InternalInvariantViolation(
            f"decomposition of {R.label} at e={e}: {claim}"
        )

    if not _is_two_sided_ideal(R, ideal):
        raise violated("I_e is not a two-sided ideal")
    if not two_sided and len(ideal) < 2:
        raise violated("I_e is trivial for a proper identity")
    if e not in sub or not is_additive_subgroup(R, sub):
        raise violated("R_e is not an additive subgroup containing e")
    sub_members = sorted(sub)
    if not product_set(R, sub_members, sub_members) <= sub:
        raise violated("R_e is not closed under multiplication")
    idx = np.asarray(sub_members)
    if not (
        np.array_equal(R.mul[e, idx], idx) and np.array_equal(R.mul[idx, e], idx)
    ):
        raise violated("e is not a two-sided identity of R_e")

    splitting: dict[int, tuple[int, int]] = {}
    for r in range(R.order):
        x = int(R.mul[r, e])
        y = int(R.add[r, R.neg[x]])
        if x not in sub or y not in ideal or int(R.add[x, y]) != r:
            raise violated(f"element {r} does not split as R_e + I_e")
        splitting[r] = (x, y)
    if len(set(splitting.values())) != R.order or len(sub) * len(ideal) != R.order:
        raise violated("the splitting is not a bijection R <-> R_e x I_e")

    if not is_isomorphic(subring(R, sub), quotient_ring(R, ideal)):
        raise violated("R_e is not isomorphic to R/I_e")

    logger.debug(
        "Decomposed %s at %s identity %d: |R_e|=%d, |I_e|=%d",
        R.label,
        side,
        e,
        len(sub),
        len(ideal),
    )
    return LeftIdentityDecomposition(
        e=e, ideal=ideal, subring=sub, splitting=splitting, side=side
    )
