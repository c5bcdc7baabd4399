"""JSON interchange for rings: ``{order, add, mul, label}`` with row-major integer tables."""

from __future__ import annotations

import json
from collections.abc import Iterator
from typing import Any

from ..errors import BadEntry
from .core import validate_ring
from .types import FiniteRing


def ring_to_dict(R: FiniteRing) -> dict[str, Any]:
    data: dict[str, Any] = {
        "order": R.order,
        "add": R.add.tolist(),
        "mul": R.mul.tolist(),
        "label": R.label,
    }
    if R.names:
        data["names"] = list(R.names)
    return data


def ring_from_dict(data: dict[str, Any]) -> FiniteRing:
    try:
        add, mul = data["add"], data["mul"]
    except (KeyError, TypeError) as exc:
        raise BadEntry("ring JSON needs 'add' and 'mul' tables") from exc
    ring = validate_ring(add, mul, label=str(data.get("label", "")), names=data.get("names", ()))
    if "order" in data and int(data["order"]) != ring.order:
        raise BadEntry(f"declared order {data['order']} does not match tables of size {ring.order}")
    return ring


def dumps_ring(R: FiniteRing) -> str:
    """One-line, key-sorted JSON (no trailing newline)."""
    return json.dumps(ring_to_dict(R), sort_keys=True, separators=(",", ":"))


def loads_ring(text: str) -> FiniteRing:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadEntry(f"input is not valid JSON: {exc}") from exc
    return ring_from_dict(data)


def iter_rings(text: str) -> Iterator[FiniteRing]:
    """Rings from a single JSON document or from JSON lines."""
    stripped = text.strip()
    if not stripped:
        return
    try:
        document = json.loads(stripped)
    except json.JSONDecodeError:
        for line in stripped.splitlines():
            if line.strip():
                yield loads_ring(line)
        return
    if isinstance(document, list):
        for item in document:
            yield ring_from_dict(item)
    else:
        yield ring_from_dict(document)
