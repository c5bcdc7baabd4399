"""Ring isomorphism testing and canonical forms.

An isomorphism is searched for generator by generator: an element of ``A`` not
yet in the span of the chosen generators is mapped to an element of ``B`` with
the same invariants, the additive map is extended to the enlarged span, and
the branch is dropped as soon as additivity, injectivity or multiplicativity
breaks on the assigned part.
"""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from .core import additive_orders, element_sets, is_commutative
from .groups import automorphisms, group_add_table, shape_for_orders
from .types import AdditiveGroupShape, FiniteRing

logger = logging.getLogger(__name__)


def fingerprint(R: FiniteRing) -> tuple:
    """Isomorphism invariants used to reject most non-isomorphic pairs cheaply."""
    sets = element_sets(R)
    orders, counts = np.unique(additive_orders(R), return_counts=True)
    diag = R.mul[np.arange(R.order), np.arange(R.order)]
    return (
        R.order,
        tuple(zip(orders.tolist(), counts.tolist())),
        len(sets.left_zero_divisors),
        len(sets.right_zero_divisors),
        len(sets.left_identities),
        len(sets.right_identities),
        int((diag == 0).sum()),
        int((diag == np.arange(R.order)).sum()),
        int((R.mul == 0).sum()),
        is_commutative(R),
    )


def _element_signatures(R: FiniteRing, with_mul: bool) -> np.ndarray:
    n = R.order
    elements = np.arange(n)
    columns = [additive_orders(R)]
    if with_mul:
        zero = R.mul == 0
        diag = R.mul[elements, elements]
        columns += [
            zero.sum(axis=0),
            zero.sum(axis=1),
            (diag == 0).astype(np.int64),
            (diag == elements).astype(np.int64),
            (R.mul == elements[None, :]).all(axis=1).astype(np.int64),
            (R.mul == elements[:, None]).all(axis=0).astype(np.int64),
        ]
    return np.stack(columns, axis=1)


class _Search:
    def __init__(self, A: FiniteRing, B: FiniteRing, with_mul: bool):
        self.A = A
        self.B = B
        self.with_mul = with_mul
        self.orders_a = additive_orders(A)
        sig_a = _element_signatures(A, with_mul)
        sig_b = _element_signatures(B, with_mul)
        self.candidates = {
            x: np.flatnonzero((sig_b == sig_a[x]).all(axis=1)) for x in range(A.order)
        }

    def run(self) -> np.ndarray | None:
        phi = np.full(self.A.order, -1, dtype=np.int64)
        phi[0] = 0
        return self._extend(phi)

    def _extend(self, phi: np.ndarray) -> np.ndarray | None:
        unassigned = np.flatnonzero(phi < 0)
        if unassigned.size == 0:
            return phi if self._multiplicative(phi, final=True) else None
        # next generator: highest additive order, smallest index
        x = int(unassigned[np.argmax(self.orders_a[unassigned])])
        image = set(phi[phi >= 0].tolist())
        for y in self.candidates[x]:
            y = int(y)
            if y in image:
                continue
            extended = self._span(phi, x, y)
            if extended is None or not self._multiplicative(extended, final=False):
                continue
            found = self._extend(extended)
            if found is not None:
                return found
        return None

    def _span(self, phi: np.ndarray, x: int, y: int) -> np.ndarray | None:
        A, B = self.A, self.B
        span = np.flatnonzero(phi >= 0)
        images = phi[span]
        extended = phi.copy()
        mx, my = x, y
        for _ in range(1, int(self.orders_a[x])):
            targets = A.add[span, mx]
            values = B.add[images, my]
            known = extended[targets]
            clash = (known >= 0) & (known != values)
            if clash.any():
                return None
            extended[targets] = values
            mx = int(A.add[mx, x])
            my = int(B.add[my, y])
        assigned = extended[extended >= 0]
        if np.unique(assigned).size != assigned.size:
            return None
        return extended

    def _multiplicative(self, phi: np.ndarray, final: bool) -> bool:
        if not self.with_mul:
            return True
        domain = np.flatnonzero(phi >= 0)
        products = self.A.mul[np.ix_(domain, domain)]
        mapped = phi[products]
        expected = self.B.mul[np.ix_(phi[domain], phi[domain])]
        mask = mapped >= 0
        if final and not mask.all():
            return False
        return bool(np.array_equal(mapped[mask], expected[mask]))


def find_isomorphism(A: FiniteRing, B: FiniteRing) -> np.ndarray | None:
    """A ring isomorphism ``A -> B`` as an index array, or ``None``."""
    if A.order != B.order or fingerprint(A) != fingerprint(B):
        return None
    return _Search(A, B, with_mul=True).run()


def is_isomorphic(A: FiniteRing, B: FiniteRing) -> bool:
    return find_isomorphism(A, B) is not None


def find_additive_isomorphism(A: FiniteRing, B: FiniteRing) -> np.ndarray | None:
    """An isomorphism of the additive groups of ``A`` and ``B``, ignoring products."""
    if A.order != B.order:
        return None
    return _Search(A, B, with_mul=False).run()


def additive_shape(R: FiniteRing) -> AdditiveGroupShape:
    values, counts = np.unique(additive_orders(R), return_counts=True)
    return shape_for_orders(dict(zip(values.tolist(), counts.tolist())), R.order)


@lru_cache(maxsize=32)
def _inverse_automorphisms(shape: AdditiveGroupShape) -> tuple[np.ndarray, np.ndarray]:
    perms = automorphisms(shape)
    inverse = np.argsort(perms, axis=1)
    inverse.setflags(write=False)
    return perms, inverse


def canonical_table(mul: np.ndarray, shape: AdditiveGroupShape) -> np.ndarray:
    """Lexicographically least relabelling of ``mul`` over all additive automorphisms.

    ``mul`` must be a multiplication table on the standard group of ``shape``.
    """
    perms, inverse = _inverse_automorphisms(shape)
    n = mul.shape[0]
    # relabelled[a, i, j] = perm_a(mul[perm_a^-1(i), perm_a^-1(j)])
    pulled = mul[inverse[:, :, None], inverse[:, None, :]]
    relabelled = np.take_along_axis(perms, pulled.reshape(len(perms), n * n), axis=1)
    best = np.lexsort(relabelled.T[::-1])[0]
    return relabelled[best].reshape(n, n)


def canonical_form(R: FiniteRing) -> tuple[AdditiveGroupShape, np.ndarray]:
    """Shape of ``(R, +)`` and the canonical multiplication table on the standard group.

    Two rings are isomorphic iff their canonical forms are equal.
    """
    shape = additive_shape(R)
    standard_add = group_add_table(shape.invariant_factors)
    if R.order == 1:
        return shape, np.zeros((1, 1), dtype=np.int64)
    standard = FiniteRing(
        order=R.order,
        add=standard_add,
        mul=np.zeros_like(standard_add),
        neg=np.argmax(standard_add == 0, axis=1),
    )
    psi = find_additive_isomorphism(R, standard)
    if psi is None:
        raise RuntimeError(f"additive group of {R.label} does not match shape {shape.name}")
    transported = np.empty_like(R.mul)
    transported[psi[:, None], psi[None, :]] = psi[R.mul]
    return shape, canonical_table(transported, shape)
