"""Independent brute-force ring census used to cross-check the enumerator.

Multiplication tables are walked row by row over each additive group.  The
only pruning is that a row must be an additive endomorphism (left
distributivity), which every table passing ``validate_ring`` satisfies.  Every
completed table goes through ``validate_ring`` and survivors are bucketed with
``is_isomorphic``.  No structure constants or canonical forms are involved.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import replace

import numpy as np
from tqdm import tqdm

from ..errors import OrderTooLarge, RingValidationError
from .core import validate_ring
from .groups import abelian_group_shapes, group_add_table
from .isomorphism import fingerprint, is_isomorphic
from .types import FiniteRing

logger = logging.getLogger(__name__)

ORACLE_MAX_ORDER = 6


def _endomorphism_rows(add: np.ndarray) -> list[np.ndarray]:
    n = add.shape[0]
    rows = []
    for tail in itertools.product(range(n), repeat=n - 1):
        row = np.array((0, *tail), dtype=np.int64)
        if np.array_equal(row[add], add[row[:, None], row[None, :]]):
            rows.append(row)
    return rows


def oracle_classes(order: int, progress: bool = False) -> list[FiniteRing]:
    """One ring per isomorphism class of the given order, found by full-table search."""
    if order > ORACLE_MAX_ORDER:
        raise OrderTooLarge(f"the brute-force oracle stops at order {ORACLE_MAX_ORDER}")
    classes: list[FiniteRing] = []
    prints: list[tuple] = []
    tables_checked = 0
    for shape in abelian_group_shapes(order):
        add = group_add_table(shape.invariant_factors)
        rows = _endomorphism_rows(add)
        combos = itertools.product(range(len(rows)), repeat=order - 1)
        total = len(rows) ** (order - 1)
        for combo in tqdm(combos, total=total, disable=not progress, desc=f"oracle {shape.name}"):
            mul = np.stack([np.zeros(order, dtype=np.int64)] + [rows[c] for c in combo])
            tables_checked += 1
            try:
                ring = validate_ring(add, mul)
            except RingValidationError:
                continue
            fp = fingerprint(ring)
            if any(p == fp and is_isomorphic(ring, c) for p, c in zip(prints, classes)):
                continue
            classes.append(ring)
            prints.append(fp)
    classes = [
        replace(ring, label=f"oracle{order}.{position}")
        for position, ring in enumerate(classes, start=1)
    ]
    logger.info(
        "Oracle at order %d: %d table(s) checked, %d class(es)", order, tables_checked, len(classes)
    )
    return classes
