from __future__ import annotations

import re
import time
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Any

from ..graph.build import build_graph
from ..graph.endpoints import endpoint_sets
from ..graph.metrics import distances
from ..graph.types import DistanceMatrix, EndpointSets, ZdGraph
from ..rings.core import element_sets
from ..rings.serialize import ring_to_dict
from ..rings.types import ElementSets, FiniteRing


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"
    UNRECONCILED = "unreconciled"


_PRECEDENCE = {
    Verdict.NOT_APPLICABLE: 0,
    Verdict.PASS: 1,
    Verdict.UNRECONCILED: 2,
    Verdict.FAIL: 3,
}


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Worst verdict wins: fail > unreconciled > pass > not-applicable."""
    return max(verdicts, key=_PRECEDENCE.__getitem__, default=Verdict.NOT_APPLICABLE)


_CLAIM_ID = re.compile(r"^[^(\[]+")


def claim_of(check_name: str) -> str:
    """``"Prop2.5(3)[loop]"`` -> ``"Prop2.5"``."""
    match = _CLAIM_ID.match(check_name)
    return match.group(0) if match else check_name


@dataclass
class SubCheck:
    name: str
    verdict: Verdict
    witness: dict[str, Any] | None = None
    note: str = ""

    @property
    def claim(self) -> str:
        return claim_of(self.name)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"name": self.name, "verdict": self.verdict.value}
        if self.witness is not None:
            data["witness"] = self.witness
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class TheoremReport:
    claim_id: str
    scope: str
    verdict: Verdict
    checks: list[SubCheck] = field(default_factory=list)
    counterexample: dict[str, Any] | None = None
    measurements: dict[str, Any] = field(default_factory=dict)
    group: str = ""
    seconds: float | None = None

    def restricted(self, claims: Iterable[str]) -> TheoremReport:
        """Copy keeping only sub-checks of the given claim ids."""
        wanted = set(claims)
        checks = [c for c in self.checks if c.claim in wanted]
        verdict = combine(c.verdict for c in checks)
        return replace(
            self,
            checks=checks,
            verdict=verdict,
            counterexample=self.counterexample if verdict is Verdict.FAIL else None,
        )

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "claim": self.claim_id,
            "scope": self.scope,
            "group": self.group,
            "verdict": self.verdict.value,
            "checks": [c.to_dict() for c in self.checks],
            "measurements": self.measurements,
        }
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        if include_timing and self.seconds is not None:
            data["seconds"] = self.seconds
        return data


class ReportBuilder:
    """Collects sub-check outcomes for one claim on one ring."""

    def __init__(self, claim_id: str, ring: FiniteRing | None, scope: str | None = None):
        self.claim_id = claim_id
        self.ring = ring
        self.scope = scope if scope is not None else (ring.label if ring is not None else "")
        self.checks: list[SubCheck] = []
        self.measurements: dict[str, Any] = {}
        self._started = time.perf_counter()

    def check(
        self,
        name: str,
        ok: bool,
        witness: dict[str, Any] | None = None,
        note: str = "",
        ring: FiniteRing | None = None,
    ) -> bool:
        """Record a pass or fail.

        ``ring`` names the failing ring for reports that span several rings;
        the first one becomes the counterexample.
        """
        ok = bool(ok)
        verdict = Verdict.PASS if ok else Verdict.FAIL
        self.checks.append(SubCheck(name, verdict, None if ok else witness, note))
        if not ok and self.ring is None and ring is not None:
            self.ring = ring
        return ok

    def not_applicable(self, name: str, note: str) -> None:
        self.checks.append(SubCheck(name, Verdict.NOT_APPLICABLE, note=note))

    def reconcile(self, name: str, matches: bool, note: str = "", **measured: Any) -> None:
        """A numeric claim whose mismatch is reported, never failed."""
        verdict = Verdict.PASS if matches else Verdict.UNRECONCILED
        self.checks.append(SubCheck(name, verdict, dict(measured) or None, note))

    def measure(self, **values: Any) -> None:
        self.measurements.update(values)

    def build(self) -> TheoremReport:
        verdict = combine(c.verdict for c in self.checks)
        counterexample = None
        if verdict is Verdict.FAIL and self.ring is not None:
            counterexample = ring_to_dict(self.ring)
        return TheoremReport(
            claim_id=self.claim_id,
            scope=self.scope,
            verdict=verdict,
            checks=self.checks,
            counterexample=counterexample,
            measurements=self.measurements,
            seconds=round(time.perf_counter() - self._started, 6),
        )


class RingFacts:
    """Lazily computed views of one ring shared by all checkers."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring

    @cached_property
    def sets(self) -> ElementSets:
        return element_sets(self.ring)

    @cached_property
    def graph(self) -> ZdGraph:
        return build_graph(self.ring)

    @cached_property
    def endpoints(self) -> EndpointSets:
        return endpoint_sets(self.ring, self.graph, strict=False)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return distances(self.graph)


def facts_for(ring: FiniteRing, facts: RingFacts | None) -> RingFacts:
    if facts is not None and facts.ring is ring:
        return facts
    return RingFacts(ring)


def sorted_list(values: Iterable[int]) -> list[int]:
    return sorted(int(v) for v in values)
