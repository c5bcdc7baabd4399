from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from ..rings.types import FiniteRing


@dataclass(frozen=True)
class ZdGraph:
    """Directed zero-divisor graph: ``x -> y`` iff ``x != y`` and ``xy = 0``.

    Loops (``x*x = 0``) are kept apart from the edge lists.  ``ring`` is
    ``None`` for hand-built digraphs.
    """

    vertices: tuple[int, ...]
    out_adj: dict[int, tuple[int, ...]]
    loops: frozenset[int] = frozenset()
    ring: FiniteRing | None = field(default=None, compare=True, repr=False)

    @cached_property
    def in_adj(self) -> dict[int, tuple[int, ...]]:
        incoming: dict[int, list[int]] = {v: [] for v in self.vertices}
        for x in self.vertices:
            for y in self.out_adj[x]:
                incoming[y].append(x)
        return {v: tuple(sorted(sources)) for v, sources in incoming.items()}

    @cached_property
    def digraph(self) -> nx.DiGraph:
        """Loop-free networkx view used for distances and connectivity."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in self.vertices for y in self.out_adj[x]]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.out_adj.get(x, ())

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class DegreeReport:
    vertex: int
    out_simple: int
    in_simple: int
    has_loop: bool

    @property
    def out_with_loop(self) -> int:
        return self.out_simple + int(self.has_loop)

    @property
    def in_with_loop(self) -> int:
        return self.in_simple + int(self.has_loop)


@dataclass(frozen=True)
class DistanceMatrix:
    """Directed distances between vertices; ``inf`` when unreachable, loops ignored."""

    vertices: tuple[int, ...]
    distances: np.ndarray

    def d(self, x: int, y: int) -> float:
        index = {v: i for i, v in enumerate(self.vertices)}
        return float(self.distances[index[x], index[y]])

    @property
    def _off_diagonal(self) -> np.ndarray:
        n = len(self.vertices)
        return self.distances[~np.eye(n, dtype=bool)]

    @property
    def diameter(self) -> float:
        """Largest distance over ordered pairs of distinct vertices; ``inf`` if any is unreachable."""
        values = self._off_diagonal
        if values.size == 0:
            return 0
        top = values.max()
        return math.inf if math.isinf(top) else int(top)

    @property
    def max_finite(self) -> int:
        values = self._off_diagonal
        finite = values[np.isfinite(values)]
        return int(finite.max()) if finite.size else 0


@dataclass(frozen=True)
class SemigroupCheck:
    closed: bool
    cancellative: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class EndpointSets:
    sinks: frozenset[int]
    sources: frozenset[int]
    inv_r: frozenset[int]
    inv_l: frozenset[int]
    middle: frozenset[int]
    sink_semigroup: SemigroupCheck
    source_semigroup: SemigroupCheck
    algebraic_sinks: frozenset[int]
    algebraic_sources: frozenset[int]

    @property
    def algebraic_agreement(self) -> bool:
        """Graph sinks/sources equal ``Z_r - Z_l`` / ``Z_l - Z_r``."""
        return self.sinks == self.algebraic_sinks and self.sources == self.algebraic_sources


@dataclass(frozen=True)
class EdgeCount:
    convention: str
    claimed: int
    actual: int

    @property
    def matches(self) -> bool:
        return self.claimed == self.actual
