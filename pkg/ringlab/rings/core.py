from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

import numpy as np

from ..errors import (
    BadEntry,
    IndexOutOfRange,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
)
from .types import ElementSets, FiniteRing

logger = logging.getLogger(__name__)


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def _as_table(table, name: str) -> np.ndarray:
    try:
        array = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise BadEntry(f"{name} table is not a rectangular integer array") from exc
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise BadEntry(f"{name} table must be square, got shape {array.shape}")
    return array


def _check_abelian_group(add: np.ndarray) -> None:
    n = add.shape[0]
    identity = np.arange(n)
    if not (np.array_equal(add[0], identity) and np.array_equal(add[:, 0], identity)):
        col = int(np.argmax((add[0] != identity) | (add[:, 0] != identity)))
        raise NotAbelianGroup(f"index 0 is not the additive identity (at {col})", (0, col))
    witness = _first_mismatch(add, add.T)
    if witness is not None:
        raise NotAbelianGroup(f"addition is not commutative at {witness}", witness)
    rows_sorted = np.sort(add, axis=1)
    bad_rows = np.flatnonzero((rows_sorted != identity).any(axis=1))
    if bad_rows.size:
        raise NotAbelianGroup(
            f"row {int(bad_rows[0])} of the addition table is not a permutation",
            (int(bad_rows[0]),),
        )
    for i in range(n):
        # (i + j) + k versus i + (j + k) for all j, k
        witness = _first_mismatch(add[add[i]], add[i][add])
        if witness is not None:
            raise NotAbelianGroup(
                f"addition is not associative at {(i, *witness)}", (i, *witness)
            )


def validate_ring(add, mul, label: str = "", names: Sequence[str] = ()) -> FiniteRing:
    """Validate a pair of Cayley tables and return the ring they define.

    The check is exhaustive over all triples.  Raises a
    :class:`~ringlab.errors.RingValidationError` subclass carrying a witness
    when an axiom fails.
    """
    add = _as_table(add, "addition")
    mul = _as_table(mul, "multiplication")
    if add.shape != mul.shape:
        raise BadEntry(f"table shapes differ: {add.shape} vs {mul.shape}")
    n = add.shape[0]
    if n < 1:
        raise BadEntry("a ring needs at least one element")
    for name, table in (("addition", add), ("multiplication", mul)):
        out_of_range = np.argwhere((table < 0) | (table >= n))
        if out_of_range.size:
            i, j = (int(v) for v in out_of_range[0])
            raise BadEntry(f"{name} entry [{i}][{j}] = {int(table[i, j])} outside 0..{n - 1}", (i, j))
    if names and len(names) != n:
        raise BadEntry(f"expected {n} element names, got {len(names)}")

    _check_abelian_group(add)

    zero_row = np.flatnonzero((mul[0] != 0) | (mul[:, 0] != 0))
    if zero_row.size:
        i = int(zero_row[0])
        raise NotDistributive(f"0 * {i} or {i} * 0 is not 0", (0, i, 0))

    for i in range(n):
        # (i * j) * k versus i * (j * k)
        witness = _first_mismatch(mul[mul[i]], mul[i][mul])
        if witness is not None:
            raise NotAssociative(
                f"multiplication is not associative at {(i, *witness)}", (i, *witness)
            )

    for i in range(n):
        row = mul[i]
        witness = _first_mismatch(row[add], add[row[:, None], row[None, :]])
        if witness is not None:
            raise NotDistributive(
                f"left distributivity fails at {(i, *witness)}", (i, *witness)
            )
        col = mul[:, i]
        witness = _first_mismatch(col[add], add[col[:, None], col[None, :]])
        if witness is not None:
            raise NotDistributive(
                f"right distributivity fails at {(i, *witness)}", (i, *witness)
            )

    neg = np.argmax(add == 0, axis=1)
    logger.debug("Validated ring %r of order %d", label, n)
    return FiniteRing(order=n, add=add, mul=mul, neg=neg, label=label, names=tuple(names))


def _check_index(R: FiniteRing, x: int) -> int:
    if not 0 <= int(x) < R.order:
        raise IndexOutOfRange(f"element {x} is not an index of a ring of order {R.order}")
    return int(x)


def left_annihilator(R: FiniteRing, x: int) -> frozenset[int]:
    """``{a : a*x = 0}``."""
    x = _check_index(R, x)
    return frozenset(int(a) for a in np.flatnonzero(R.mul[:, x] == 0))


def right_annihilator(R: FiniteRing, x: int) -> frozenset[int]:
    """``{a : x*a = 0}``."""
    x = _check_index(R, x)
    return frozenset(int(a) for a in np.flatnonzero(R.mul[x] == 0))


def left_identities(R: FiniteRing) -> frozenset[int]:
    identity = np.arange(R.order)
    found = np.flatnonzero((R.mul == identity[None, :]).all(axis=1))
    return frozenset(int(e) for e in found if e != 0)


def right_identities(R: FiniteRing) -> frozenset[int]:
    identity = np.arange(R.order)
    found = np.flatnonzero((R.mul == identity[:, None]).all(axis=0))
    return frozenset(int(e) for e in found if e != 0)


def element_sets(R: FiniteRing) -> ElementSets:
    zero = R.mul == 0
    nonzero_zero = zero[1:, 1:]
    left_zd = frozenset(int(x) + 1 for x in np.flatnonzero(nonzero_zero.any(axis=1)))
    right_zd = frozenset(int(x) + 1 for x in np.flatnonzero(nonzero_zero.any(axis=0)))
    lefts = left_identities(R)
    rights = right_identities(R)
    both = lefts & rights
    two_sided = min(both) if both else None
    return ElementSets(
        left_zero_divisors=left_zd,
        right_zero_divisors=right_zd,
        zero_divisors=left_zd | right_zd,
        left_identities=lefts,
        right_identities=rights,
        two_sided_identity=two_sided,
    )


def is_commutative(R: FiniteRing) -> bool:
    return bool(np.array_equal(R.mul, R.mul.T))


def opposite_ring(R: FiniteRing) -> FiniteRing:
    """Same addition, ``a *op b = b * a``."""
    label = R.label[3:-1] if R.label.startswith("op(") and R.label.endswith(")") else f"op({R.label})"
    return FiniteRing(
        order=R.order, add=R.add, mul=R.mul.T, neg=R.neg, label=label, names=R.names
    )


def additive_orders(R: FiniteRing) -> np.ndarray:
    """Additive order of every element (element 0 has order 1)."""
    n = R.order
    orders = np.zeros(n, dtype=np.int64)
    elements = np.arange(n)
    multiple = elements.copy()
    for m in range(1, n + 1):
        newly = (multiple == 0) & (orders == 0)
        orders[newly] = m
        if orders.all():
            break
        multiple = R.add[multiple, elements]
    return orders


def product_set(R: FiniteRing, left: Iterable[int], right: Iterable[int]) -> frozenset[int]:
    """``{a*b : a in left, b in right}``."""
    left = np.fromiter(left, dtype=np.int64)
    right = np.fromiter(right, dtype=np.int64)
    if left.size == 0 or right.size == 0:
        return frozenset()
    return frozenset(int(v) for v in np.unique(R.mul[np.ix_(left, right)]))


def is_additive_subgroup(R: FiniteRing, elements: frozenset[int]) -> bool:
    if 0 not in elements:
        return False
    members = np.fromiter(sorted(elements), dtype=np.int64)
    sums = R.add[np.ix_(members, members)]
    return bool(np.isin(sums, members).all())
