from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _frozen(table) -> np.ndarray:
    array = np.array(table, dtype=np.int64, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite ring given by Cayley tables over element indices ``0..order-1``.

    Index 0 is always the additive identity.  Instances are only produced by
    :func:`ringlab.rings.core.validate_ring` and are immutable.
    """

    order: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    label: str = ""
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "add", _frozen(self.add))
        object.__setattr__(self, "mul", _frozen(self.mul))
        object.__setattr__(self, "neg", _frozen(self.neg))
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def zero(self) -> int:
        return 0

    def name(self, x: int) -> str:
        if self.names:
            return self.names[x]
        return str(x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.add.tobytes(), self.mul.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order}, label={self.label!r})"


@dataclass(frozen=True)
class ElementSets:
    left_zero_divisors: frozenset[int]
    right_zero_divisors: frozenset[int]
    zero_divisors: frozenset[int]
    left_identities: frozenset[int]
    right_identities: frozenset[int]
    two_sided_identity: int | None = None

    @property
    def proper_left_identities(self) -> frozenset[int]:
        if self.two_sided_identity is not None:
            return frozenset()
        return self.left_identities

    @property
    def proper_right_identities(self) -> frozenset[int]:
        if self.two_sided_identity is not None:
            return frozenset()
        return self.right_identities

    @property
    def identities_two_sided(self) -> bool:
        """True when every one-sided identity is the two-sided identity."""
        return not self.proper_left_identities and not self.proper_right_identities


@dataclass(frozen=True)
class LeftIdentityDecomposition:
    """``R = R_e (+) I_e`` for a one-sided identity ``e``.

    For ``side == "left"``: ``ideal = {a : ae = 0}`` and ``subring = {a : ae = a}``.
    For ``side == "right"`` the products are taken on the other side.
    ``splitting[r]`` is the unique ``(x, y)`` with ``x`` in ``subring``,
    ``y`` in ``ideal`` and ``r = x + y``.
    """

    e: int
    ideal: frozenset[int]
    subring: frozenset[int]
    splitting: dict[int, tuple[int, int]] = field(repr=False)
    side: str = "left"


@dataclass(frozen=True)
class AdditiveGroupShape:
    """Abelian group ``Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``.

    Elements are indexed by the mixed-radix encoding of their coordinates,
    first coordinate most significant.  ``generators[i]`` is the index of the
    i-th unit vector.
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return int(np.prod(self.invariant_factors, dtype=np.int64)) if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def name(self) -> str:
        if not self.invariant_factors:
            return "0"
        return "x".join(f"Z{d}" for d in self.invariant_factors)


@dataclass
class EnumerationStats:
    shards: int = 0
    nodes: int = 0
    structures: int = 0
    classes: int = 0
    seconds: float = 0.0


@dataclass
class EnumerationTask:
    order: int
    shape: AdditiveGroupShape | None = None
    dedup: bool = True
    stats: EnumerationStats = field(default_factory=EnumerationStats)
