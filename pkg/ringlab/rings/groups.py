"""Finite abelian groups as mixed-radix index tables.

Shapes are listed from invariant factors, elements are coordinate vectors
encoded first-coordinate-most-significant, and automorphisms are returned as
permutation arrays over those indices.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from functools import lru_cache

import numpy as np
from sympy import factorint
from sympy.utilities.iterables import partitions

from .types import AdditiveGroupShape

logger = logging.getLogger(__name__)


def _strides(moduli: Sequence[int]) -> np.ndarray:
    strides = np.ones(len(moduli), dtype=np.int64)
    for i in range(len(moduli) - 2, -1, -1):
        strides[i] = strides[i + 1] * moduli[i + 1]
    return strides


def coordinates(moduli: Sequence[int]) -> np.ndarray:
    """Coordinate vectors of every element, shape ``(n, k)``."""
    moduli = tuple(int(m) for m in moduli)
    n = int(np.prod(moduli, dtype=np.int64)) if moduli else 1
    if not moduli:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(np.unravel_index(np.arange(n), moduli), axis=1).astype(np.int64)


def encode(coords: np.ndarray, moduli: Sequence[int]) -> np.ndarray:
    """Inverse of :func:`coordinates`; reduces each coordinate first."""
    moduli_arr = np.asarray(moduli, dtype=np.int64)
    if moduli_arr.size == 0:
        return np.zeros(coords.shape[:-1], dtype=np.int64)
    return (np.mod(coords, moduli_arr) * _strides(moduli)).sum(axis=-1)


def group_add_table(moduli: Sequence[int]) -> np.ndarray:
    """Addition table of ``Z/m_1 + ... + Z/m_k`` (any moduli, not only chains)."""
    coords = coordinates(moduli)
    return encode(coords[:, None, :] + coords[None, :, :], moduli)


def _prime_power_partitions(p: int, exponent: int) -> list[tuple[int, ...]]:
    parts = []
    for partition in partitions(exponent):
        exps = sorted(
            itertools.chain.from_iterable([e] * count for e, count in partition.items()),
            reverse=True,
        )
        parts.append(tuple(p**e for e in exps))
    # fewest factors (cyclic) first
    parts.sort(key=lambda factors: (len(factors), [-f for f in factors]))
    return parts


def abelian_group_shapes(n: int) -> list[AdditiveGroupShape]:
    """All abelian groups of order ``n`` up to isomorphism, cyclic first."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    if n == 1:
        return [AdditiveGroupShape(invariant_factors=(), generators=())]
    per_prime = [_prime_power_partitions(p, e) for p, e in sorted(factorint(n).items())]
    shapes = []
    for choice in itertools.product(*per_prime):
        rank = max(len(parts) for parts in choice)
        descending = []
        for i in range(rank):
            d = 1
            for parts in choice:
                if i < len(parts):
                    d *= parts[i]
            descending.append(d)
        factors = tuple(reversed(descending))
        generators = tuple(int(s) for s in _strides(factors))
        shapes.append(AdditiveGroupShape(invariant_factors=factors, generators=generators))
    shapes.sort(key=lambda s: (s.rank, [-d for d in reversed(s.invariant_factors)]))
    return shapes


def shape_for_orders(order_counts: dict[int, int], n: int) -> AdditiveGroupShape:
    """The shape whose element-order statistics match ``order_counts``."""
    for shape in abelian_group_shapes(n):
        if element_order_counts(shape.invariant_factors) == order_counts:
            return shape
    raise ValueError(f"no abelian group of order {n} has element orders {order_counts}")


@lru_cache(maxsize=64)
def _element_orders_cached(moduli: tuple[int, ...]) -> np.ndarray:
    coords = coordinates(moduli)
    if not moduli:
        return np.ones(1, dtype=np.int64)
    moduli_arr = np.asarray(moduli, dtype=np.int64)
    per_coord = moduli_arr // np.gcd(coords, moduli_arr)
    orders = np.lcm.reduce(per_coord, axis=1)
    orders.setflags(write=False)
    return orders


def element_orders(moduli: Sequence[int]) -> np.ndarray:
    return _element_orders_cached(tuple(int(m) for m in moduli))


def element_order_counts(moduli: Sequence[int]) -> dict[int, int]:
    values, counts = np.unique(element_orders(moduli), return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


@lru_cache(maxsize=32)
def _automorphisms_cached(factors: tuple[int, ...]) -> np.ndarray:
    n = int(np.prod(factors, dtype=np.int64)) if factors else 1
    if not factors:
        perms = np.zeros((1, 1), dtype=np.int64)
        perms.setflags(write=False)
        return perms
    coords = coordinates(factors)
    orders = element_orders(factors)
    # image of generator i must be killed by d_i
    candidates = [np.flatnonzero(d % orders == 0) for d in factors]
    perms = []
    for images in itertools.product(*candidates):
        image_coords = coords[list(images)]
        perm = encode(coords @ image_coords, factors)
        if np.unique(perm).size == n:
            perms.append(perm)
    result = np.array(perms, dtype=np.int64)
    result.setflags(write=False)
    logger.debug("Group %s has %d automorphisms", factors, len(result))
    return result


def automorphisms(shape: AdditiveGroupShape) -> np.ndarray:
    """Every automorphism of the group as a row ``perm`` with ``perm[x] = phi(x)``."""
    return _automorphisms_cached(tuple(shape.invariant_factors))
