from __future__ import annotations

import math
from typing import Any

from .metrics import clique_number, distances, sinks, sources
from .types import ZdGraph

SINK_COLOR = "#4c72b0"
SOURCE_COLOR = "#dd8452"


def graph_to_dict(G: ZdGraph) -> dict[str, Any]:
    """JSON-ready summary; an infinite diameter is written as the string ``"inf"``."""
    dist = distances(G)
    diameter = dist.diameter
    return {
        "vertices": list(G.vertices),
        "edges": [[x, y] for x, y in G.edges()],
        "loops": sorted(G.loops),
        "sinks": sorted(sinks(G)),
        "sources": sorted(sources(G)),
        "diameter": "inf" if math.isinf(diameter) else diameter,
        "max_finite_distance": dist.max_finite,
        "clique_number": clique_number(G),
    }


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(G: ZdGraph, title: str | None = None) -> str:
    """Graphviz source with sinks and sources filled and loops drawn."""
    ring = G.ring
    if title is None:
        title = f"Gamma({ring.label})" if ring is not None and ring.label else "Gamma"
    sink_set, source_set = sinks(G), sources(G)
    lines = [f"digraph {_quote(title)} {{", "  node [shape=circle];"]
    for v in G.vertices:
        label = ring.name(v) if ring is not None else str(v)
        attrs = [f"label={_quote(label)}"]
        if v in sink_set:
            attrs.append(f'style=filled, fillcolor="{SINK_COLOR}"')
        elif v in source_set:
            attrs.append(f'style=filled, fillcolor="{SOURCE_COLOR}"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for x, y in G.edges():
        lines.append(f"  {x} -> {y};")
    for v in sorted(G.loops):
        lines.append(f"  {v} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
