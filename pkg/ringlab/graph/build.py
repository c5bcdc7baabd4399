from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from ..rings.core import element_sets, opposite_ring
from ..rings.types import FiniteRing
from .types import ZdGraph

logger = logging.getLogger(__name__)


def build_graph(R: FiniteRing) -> ZdGraph:
    """Γ(R) on the nonzero zero-divisors of ``R``."""
    vertices = tuple(sorted(element_sets(R).zero_divisors))
    idx = np.asarray(vertices, dtype=np.int64)
    out_adj: dict[int, tuple[int, ...]] = {}
    loops: set[int] = set()
    if idx.size:
        zero = R.mul[np.ix_(idx, idx)] == 0
        for row, x in enumerate(vertices):
            if zero[row, row]:
                loops.add(x)
            out_adj[x] = tuple(int(idx[c]) for c in np.flatnonzero(zero[row]) if c != row)
    graph = ZdGraph(vertices=vertices, out_adj=out_adj, loops=frozenset(loops), ring=R)
    logger.debug(
        "Built graph of %s: %d vertices, %d edges, %d loops",
        R.label,
        len(vertices),
        sum(len(v) for v in out_adj.values()),
        len(loops),
    )
    return graph


def reverse_graph(G: ZdGraph) -> ZdGraph:
    """Every edge reversed; the ring (if any) replaced by its opposite."""
    incoming = G.in_adj
    return ZdGraph(
        vertices=G.vertices,
        out_adj={v: incoming[v] for v in G.vertices},
        loops=G.loops,
        ring=opposite_ring(G.ring) if G.ring is not None else None,
    )


def graph_from_edges(
    vertices: Iterable[int], edges: Iterable[tuple[int, int]], loops: Iterable[int] = ()
) -> ZdGraph:
    """A digraph not backed by a ring, e.g. to test the network predicate on hand-made graphs."""
    vertices = tuple(sorted(set(vertices)))
    out: dict[int, set[int]] = {v: set() for v in vertices}
    for x, y in edges:
        if x != y:
            out[x].add(y)
    return ZdGraph(
        vertices=vertices,
        out_adj={v: tuple(sorted(out[v])) for v in vertices},
        loops=frozenset(loops),
    )
