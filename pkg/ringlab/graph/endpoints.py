from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from ..errors import InternalInvariantViolation, NotLeftIdentity
from ..rings.builders import decompose
from ..rings.core import element_sets
from ..rings.types import FiniteRing
from .build import build_graph
from .metrics import EDGE_CONVENTIONS, edge_count, sinks, sources
from .types import EdgeCount, EndpointSets, SemigroupCheck, ZdGraph

logger = logging.getLogger(__name__)

# Below this order the sink/source identities of the endpoint sets are only
# recorded, not enforced.
ENDPOINT_THEOREM_MIN_ORDER = 5


def _unique_solutions(R: FiniteRing, target: int, side: str) -> frozenset[int]:
    hits = R.mul == target
    counts = hits.sum(axis=1) if side == "right" else hits.sum(axis=0)
    return frozenset(int(r) for r in np.flatnonzero(counts == 1))


def strongly_right_invertible(R: FiniteRing) -> frozenset[int]:
    """Elements with exactly one right inverse for every left identity (empty without a proper one)."""
    identities = element_sets(R).proper_left_identities
    if not identities:
        return frozenset()
    result: frozenset[int] | None = None
    for e in sorted(identities):
        solutions = _unique_solutions(R, e, "right")
        result = solutions if result is None else result & solutions
    return result or frozenset()


def strongly_left_invertible(R: FiniteRing) -> frozenset[int]:
    identities = element_sets(R).proper_right_identities
    if not identities:
        return frozenset()
    result: frozenset[int] | None = None
    for e in sorted(identities):
        solutions = _unique_solutions(R, e, "left")
        result = solutions if result is None else result & solutions
    return result or frozenset()


def semigroup_closure_check(S: Iterable[int], R: FiniteRing, side: str = "left") -> SemigroupCheck:
    """Closure ``S*S ⊆ S`` and one-sided cancellation inside ``S``.

    ``side="left"`` tests ``ax = ay ⟹ x = y``; ``side="right"`` tests
    ``xa = ya ⟹ x = y``.  The witness is ``(a, b, ab)`` for a closure failure
    or ``(a, x, y)`` for a cancellation failure.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    members = sorted({int(s) for s in S})
    if not members:
        return SemigroupCheck(closed=True, cancellative=True)
    idx = np.asarray(members, dtype=np.int64)
    block = R.mul[np.ix_(idx, idx)]
    outside = np.argwhere(~np.isin(block, idx))
    if outside.size:
        i, j = outside[0]
        return SemigroupCheck(
            closed=False,
            cancellative=_cancellative(block, idx, side) is None,
            witness=(members[i], members[j], int(block[i, j])),
        )
    witness = _cancellative(block, idx, side)
    return SemigroupCheck(closed=True, cancellative=witness is None, witness=witness)


def _cancellative(block: np.ndarray, idx: np.ndarray, side: str) -> tuple[int, ...] | None:
    rows = block if side == "left" else block.T
    for a, row in enumerate(rows):
        values, counts = np.unique(row, return_counts=True)
        repeated = np.flatnonzero(counts > 1)
        if repeated.size:
            value = values[repeated[0]]
            x, y = np.flatnonzero(row == value)[:2]
            return (int(idx[a]), int(idx[x]), int(idx[y]))
    return None


def endpoint_sets(
    R: FiniteRing, G: ZdGraph | None = None, strict: bool = True
) -> EndpointSets:
    """Sink/source sets computed from the graph and from the zero-divisor sets.

    With ``strict``, a disagreement between the two routes on a ring with at
    least five elements raises :class:`~ringlab.errors.InternalInvariantViolation`;
    otherwise it is only recorded in the result.
    """
    G = G if G is not None else build_graph(R)
    sets = element_sets(R)
    graph_sinks, graph_sources = sinks(G), sources(G)
    algebraic_sinks = sets.right_zero_divisors - sets.left_zero_divisors
    algebraic_sources = sets.left_zero_divisors - sets.right_zero_divisors
    result = EndpointSets(
        sinks=graph_sinks,
        sources=graph_sources,
        inv_r=strongly_right_invertible(R),
        inv_l=strongly_left_invertible(R),
        middle=sets.left_zero_divisors & sets.right_zero_divisors,
        sink_semigroup=semigroup_closure_check(graph_sinks, R, "left"),
        source_semigroup=semigroup_closure_check(graph_sources, R, "right"),
        algebraic_sinks=algebraic_sinks,
        algebraic_sources=algebraic_sources,
    )
    if not result.algebraic_agreement:
        if strict and R.order >= ENDPOINT_THEOREM_MIN_ORDER:
            raise InternalInvariantViolation(
                f"{R.label}: graph sinks {sorted(graph_sinks)} / sources {sorted(graph_sources)} "
                f"differ from Z_r-Z_l {sorted(algebraic_sinks)} / Z_l-Z_r {sorted(algebraic_sources)}"
            )
        logger.debug(
            "%s: endpoint sets differ from the zero-divisor differences at order %d",
            R.label,
            R.order,
        )
    return result


def _pair_count(R: FiniteRing, M: Iterable[int], N: Iterable[int], convention: str) -> int:
    """Edges of the induced bipartite subgraph between ``M`` and ``N``.

    ``simple`` and ``loop`` count ``(m, n) in M x N`` with ``mn = 0``, the
    diagonal only under ``loop``.  ``cycle`` counts every directed edge
    ``x -> y`` (``x != y``) with one end in ``M`` and the other in ``N``.
    """
    M, N = set(M), set(N)
    if not M or not N:
        return 0
    if convention == "cycle":
        union = np.asarray(sorted(M | N), dtype=np.int64)
        in_m = np.isin(union, sorted(M))
        in_n = np.isin(union, sorted(N))
        between = (in_m[:, None] & in_n[None, :]) | (in_n[:, None] & in_m[None, :])
        zero = (R.mul[np.ix_(union, union)] == 0) & ~np.eye(union.size, dtype=bool)
        return int((zero & between).sum())
    m_idx = np.asarray(sorted(M), dtype=np.int64)
    n_idx = np.asarray(sorted(N), dtype=np.int64)
    zero = R.mul[np.ix_(m_idx, n_idx)] == 0
    if convention == "simple":
        zero &= m_idx[:, None] != n_idx[None, :]
    return int(zero.sum())


def claimed_edge_count(R: FiniteRing, e: int, convention: str = "simple") -> EdgeCount:
    """Evaluate the decomposition edge formula for ``e`` next to the real edge count.

    claimed = |I| (|I| - 1 + E(R_e*, I_e*) + E(R_e*, R_e* + I_e*) + (2 - |I|) E(R_e))
    """
    if convention not in EDGE_CONVENTIONS:
        raise ValueError(f"unknown edge convention {convention!r}")
    if e not in element_sets(R).proper_left_identities:
        raise NotLeftIdentity(f"{e} is not a proper left identity of {R.label}")
    parts = decompose(R, e)
    ideal_star = parts.ideal - {0}
    sub_star = parts.subring - {0}
    mixed = {int(R.add[x, y]) for x in sub_star for y in ideal_star}
    size = len(parts.ideal)
    claimed = size * (
        size
        - 1
        + _pair_count(R, sub_star, ideal_star, convention)
        + _pair_count(R, sub_star, mixed, convention)
        + (2 - size) * _pair_count(R, sub_star, sub_star, convention)
    )
    actual = edge_count(build_graph(R), convention)
    logger.debug(
        "%s e=%d [%s]: claimed %d edges, counted %d", R.label, e, convention, claimed, actual
    )
    return EdgeCount(convention=convention, claimed=claimed, actual=actual)


def identity_semigroup(R: FiniteRing, e: int) -> frozenset[int]:
    """``{u : au = e for some strongly right invertible a}`` for a proper left identity ``e``."""
    if e not in element_sets(R).proper_left_identities:
        raise NotLeftIdentity(f"{e} is not a proper left identity of {R.label}")
    inv = sorted(strongly_right_invertible(R))
    if not inv:
        return frozenset()
    hits = R.mul[np.asarray(inv, dtype=np.int64)] == e
    return frozenset(int(u) for u in np.flatnonzero(hits.any(axis=0)))
