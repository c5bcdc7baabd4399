"""Shared rings for the test suite.

Index conventions used throughout the tests:

* ``T2 = first_row(2, 2)``: 0 = 0, 1 = e12, 2 = e11, 3 = e11 + e12.
* ``U3 = first_row(2, 3)``: ``(a, b)`` has index ``3a + b``.
"""

import numpy as np
import pytest

from ringlab.config import LabConfig
from ringlab.rings import (
    FiniteRing,
    cyclic_ring,
    direct_product,
    first_row_ring,
    full_matrix_ring,
    null_ring,
    opposite_ring,
    validate_ring,
)


def relabel(R: FiniteRing, perm) -> FiniteRing:
    """The same ring with element ``x`` renamed ``perm[x]`` (``perm[0]`` must be 0)."""
    perm = np.asarray(perm, dtype=np.int64)
    n = R.order
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    add[np.ix_(perm, perm)] = perm[R.add]
    mul[np.ix_(perm, perm)] = perm[R.mul]
    return validate_ring(add, mul, label=f"relabel({R.label})")


@pytest.fixture
def config(tmp_path) -> LabConfig:
    """Quiet, single-process configuration."""
    return LabConfig(progress=False, log_dir=str(tmp_path / "logs"))


@pytest.fixture
def T2() -> FiniteRing:
    return first_row_ring(2, 2)


@pytest.fixture
def T2op(T2) -> FiniteRing:
    return opposite_ring(T2)


@pytest.fixture
def U3() -> FiniteRing:
    return first_row_ring(2, 3)


@pytest.fixture
def Z6() -> FiniteRing:
    return cyclic_ring(6)


@pytest.fixture
def F5() -> FiniteRing:
    return cyclic_ring(5)


@pytest.fixture
def null2() -> FiniteRing:
    return null_ring([2])


@pytest.fixture
def null22() -> FiniteRing:
    return null_ring([2, 2])


@pytest.fixture
def F2xF2() -> FiniteRing:
    return direct_product(cyclic_ring(2), cyclic_ring(2))


@pytest.fixture
def M2F2() -> FiniteRing:
    return full_matrix_ring(2, 2)


@pytest.fixture
def square_path_ring() -> FiniteRing:
    """``{0, a, b, a+b}`` with ``a*a = b`` and every other product of generators zero.

    Indices: 0, 1 = b, 2 = a, 3 = a + b (coordinates over Z2 x Z2, ``a`` first).
    """
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]
    return validate_ring(add, mul, label="a^2=b")
