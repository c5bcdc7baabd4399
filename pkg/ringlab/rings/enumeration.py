"""Exhaustive enumeration of finite rings by structure constants.

For an additive group ``Z/d_1 + ... + Z/d_k`` with generators ``g_i`` a ring is
fixed by the products ``g_i g_j``, each of additive order dividing
``gcd(d_i, d_j)``.  The search assigns these products one row ``(g_t g_l)_l``
at a time and keeps a partial assignment only while every generator triple
whose associativity condition is already decidable holds:

    (g_i g_j) g_l = sum_m c_ijm g_m g_l  ==  sum_m c_jlm g_i g_m = g_i (g_j g_l)

Work is sharded by (group shape, first row).  Each shard de-duplicates
locally by canonical table and the parent merges shards in a fixed order.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from multiprocessing import Pool

import numpy as np
from tqdm import tqdm

from ..config import LabConfig
from ..errors import InternalInvariantViolation, OrderTooLarge, RingValidationError
from .core import validate_ring
from .groups import abelian_group_shapes, coordinates, element_orders, encode, group_add_table
from .isomorphism import canonical_table
from .types import AdditiveGroupShape, EnumerationStats, EnumerationTask, FiniteRing

logger = logging.getLogger(__name__)

_CHUNK = 8192


@dataclass(frozen=True)
class _ShapeData:
    shape: AdditiveGroupShape
    factors: np.ndarray
    coords: np.ndarray
    add: np.ndarray
    # rows[t]: candidate rows (g_t g_l)_l as coordinates, shape (M_t, k, k)
    rows: tuple[np.ndarray, ...]


@lru_cache(maxsize=16)
def _shape_data(shape: AdditiveGroupShape) -> _ShapeData:
    factors = tuple(shape.invariant_factors)
    coords = coordinates(factors)
    orders = element_orders(factors)
    k = len(factors)
    rows = []
    for t in range(k):
        domains = [
            np.flatnonzero(gcd(factors[t], factors[l]) % orders == 0) for l in range(k)
        ]
        choices = np.array(list(itertools.product(*domains)), dtype=np.int64)
        rows.append(coords[choices])
    return _ShapeData(
        shape=shape,
        factors=np.asarray(factors, dtype=np.int64),
        coords=coords,
        add=group_add_table(factors),
        rows=tuple(rows),
    )


def _surviving_rows(data: _ShapeData, fixed: np.ndarray, t: int) -> np.ndarray:
    """Indices of candidate rows ``t`` compatible with the fixed rows ``0..t-1``."""
    candidates = data.rows[t]
    k = len(data.factors)
    r = t + 1
    keep = []
    for start in range(0, len(candidates), _CHUNK):
        block = candidates[start : start + _CHUNK]
        m = len(block)
        P = np.zeros((m, k, k, k), dtype=np.int64)
        P[:, :t] = fixed
        P[:, t] = block
        head = P[:, :r, :r, :]
        # (i, j) is decidable once rows i, j and the support of g_i g_j are fixed
        decidable = ~(head[..., r:] != 0).any(axis=-1)
        lhs = np.einsum("aijm,amlc->aijlc", head, P)
        rhs = np.einsum("ajlm,aimc->aijlc", P[:, :r], P[:, :r])
        holds = (np.mod(lhs - rhs, data.factors) == 0).all(axis=(3, 4))
        ok = (holds | ~decidable).all(axis=(1, 2))
        keep.append(np.flatnonzero(ok) + start)
    return np.concatenate(keep) if keep else np.zeros(0, dtype=np.int64)


def _mul_table(data: _ShapeData, P: np.ndarray) -> np.ndarray:
    products = np.einsum("xi,yj,ijc->xyc", data.coords, data.coords, P)
    return encode(products, data.factors)


def _complete(data: _ShapeData, fixed: np.ndarray, stats: dict) -> Iterator[np.ndarray]:
    t = len(fixed)
    k = len(data.factors)
    if t == k:
        yield fixed
        return
    survivors = _surviving_rows(data, fixed, t)
    stats["nodes"] += len(survivors)
    for index in survivors:
        yield from _complete(data, np.concatenate([fixed, data.rows[t][index][None]]), stats)


def _run_shard(job: tuple[AdditiveGroupShape, int, bool]) -> tuple[list, dict]:
    """Enumerate every ring on ``shape`` whose first row is candidate ``first``."""
    shape, first, dedup = job
    data = _shape_data(shape)
    stats = {"nodes": 1, "structures": 0}
    found: dict[bytes, np.ndarray] = {}
    raw: list[np.ndarray] = []
    start = data.rows[0][first][None]
    for P in _complete(data, start, stats):
        mul = _mul_table(data, P)
        try:
            validate_ring(data.add, mul)
        except RingValidationError as exc:
            raise InternalInvariantViolation(
                f"structure constants on {shape.name} passed the generator checks but "
                f"failed validation: {exc}"
            ) from exc
        stats["structures"] += 1
        if dedup:
            canonical = canonical_table(mul, shape)
            found.setdefault(canonical.astype(np.uint8).tobytes(), canonical)
        else:
            raw.append(mul)
    if dedup:
        return sorted(found.items()), stats
    return [(b"", mul) for mul in raw], stats


def _check_order(order: int, config: LabConfig) -> None:
    cap = config.effective_enumeration_cap
    if order < 1:
        raise OrderTooLarge(f"ring order must be positive, got {order}")
    if order > cap:
        hint = "" if config.allow_large_enumeration else " (use --allow-large for up to 16)"
        raise OrderTooLarge(f"order {order} exceeds the enumeration cap of {cap}{hint}")


def enumerate_rings(task: EnumerationTask, config: LabConfig | None = None) -> Iterator[FiniteRing]:
    """Yield every ring of ``task.order`` (one per isomorphism class when ``task.dedup``).

    Rings come out grouped by additive group shape (cyclic first) and, within a
    shape, ordered by canonical table when deduplicating, or in search order
    otherwise.  Counters are written to ``task.stats``.
    """
    config = config or LabConfig.from_env()
    _check_order(task.order, config)
    started = time.time()
    shapes = [task.shape] if task.shape is not None else abelian_group_shapes(task.order)
    task.stats = EnumerationStats()
    logger.info(
        "Enumerating rings of order %d over %d group shape(s), dedup=%s",
        task.order,
        len(shapes),
        task.dedup,
    )

    emitted = 0
    for shape in shapes:
        if shape.order != task.order:
            raise ValueError(f"shape {shape.name} does not have order {task.order}")
        if shape.rank == 0:
            task.stats.structures += 1
            task.stats.classes += int(task.dedup)
            emitted += 1
            yield validate_ring([[0]], [[0]], label=f"ring{task.order}.{shape.name}.1")
            continue
        data = _shape_data(shape)
        firsts = _surviving_rows(data, np.zeros((0, shape.rank, shape.rank), dtype=np.int64), 0)
        jobs = [(shape, int(i), task.dedup) for i in firsts]
        task.stats.shards += len(jobs)
        results = _run_jobs(jobs, config, desc=f"order {task.order} {shape.name}")

        merged: dict[bytes, np.ndarray] = {}
        raw: list[np.ndarray] = []
        for items, stats in results:
            task.stats.nodes += stats["nodes"]
            task.stats.structures += stats["structures"]
            for key, mul in items:
                if task.dedup:
                    merged.setdefault(key, mul)
                else:
                    raw.append(mul)
        tables = [merged[key] for key in sorted(merged)] if task.dedup else raw
        if task.dedup:
            task.stats.classes += len(tables)
        # each shape is complete before its rings go out, so labels are final
        for position, mul in enumerate(tables, start=1):
            emitted += 1
            yield validate_ring(data.add, mul, label=f"ring{task.order}.{shape.name}.{position}")

    task.stats.seconds = round(time.time() - started, 3)
    logger.info(
        "Order %d: %d structure(s), %d ring(s) emitted in %.2fs",
        task.order,
        task.stats.structures,
        emitted,
        task.stats.seconds,
    )


def _run_jobs(jobs: list, config: LabConfig, desc: str) -> list:
    progress = {"total": len(jobs), "desc": desc, "disable": not config.progress, "leave": False}
    if config.shards <= 1 or len(jobs) <= 1:
        return [_run_shard(job) for job in tqdm(jobs, **progress)]
    with Pool(processes=min(config.shards, len(jobs))) as pool:
        # shard results are merged by canonical key, so completion order only
        # matters for raw output
        mapper = pool.imap if config.deterministic else pool.imap_unordered
        return list(tqdm(mapper(_run_shard, jobs), **progress))


def enumerate_order(
    order: int, dedup: bool = True, config: LabConfig | None = None
) -> list[FiniteRing]:
    """Convenience wrapper returning :func:`enumerate_rings` as a list."""
    return list(enumerate_rings(EnumerationTask(order=order, dedup=dedup), config))
