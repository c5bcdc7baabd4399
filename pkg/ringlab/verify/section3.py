"""Sink and source claims: square-zero endpoints, counts, degrees, invertibility."""

from __future__ import annotations

import logging

from ..graph.build import build_graph
from ..graph.endpoints import ENDPOINT_THEOREM_MIN_ORDER
from ..graph.metrics import degree_report, graph_shape, is_network
from ..rings.core import element_sets, left_annihilator, opposite_ring, right_annihilator
from ..rings.types import FiniteRing
from .types import ReportBuilder, RingFacts, TheoremReport, facts_for, sorted_list

logger = logging.getLogger(__name__)


def _square_zero(R: FiniteRing, elements) -> list[int]:
    return [int(r) for r in sorted(elements) if R.mul[r, r] == 0]


def _square_zero_source(report: ReportBuilder, R: FiniteRing, side: str) -> None:
    """``R`` is the ring itself for ``side="source"`` and its opposite for ``"sink"``."""
    name = f"Prop3.1[{side}]"
    G = build_graph(R)
    sources = {v for v in G.vertices if G.out_adj[v] and not G.in_adj[v]}
    square_zero = _square_zero(R, sources)
    if not square_zero:
        report.not_applicable(name, f"no {side} b with b*b = 0")
        return
    b = square_zero[0]
    if R.order != 4:
        report.check(name, False, {"b": b, "order": R.order})
        return
    a, c = (x for x in range(1, 4) if x != b)
    identities = element_sets(R).left_identities
    witness = {"b": b, "a": a, "c": c}
    report.check(
        name,
        bool({a, c} <= identities and R.mul[b, a] == 0 and R.mul[b, c] == 0),
        witness,
    )


def check_prop_3_1(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """A source (sink) with square zero only occurs in the four-element out-star (in-star) ring."""
    report = ReportBuilder("Prop3.1", R)
    _square_zero_source(report, R, "source")
    _square_zero_source(report, opposite_ring(R), "sink")
    return report.build()


def _identity_side_checks(
    report: ReportBuilder,
    facts: RingFacts,
    claim: str,
    identities: frozenset[int],
    ends: frozenset[int],
    others: frozenset[int],
    side: str,
) -> None:
    """Prop 3.2 (left identities, sinks) or Prop 3.4 (right identities, sources)."""
    R = facts.ring
    ends_name = "sinks" if side == "left" else "sources"
    if not identities:
        report.not_applicable(claim, f"no proper {side} identity")
        return
    if R.order < ENDPOINT_THEOREM_MIN_ORDER:
        report.not_applicable(claim, "needs at least five elements")
        return
    report.check(f"{claim}(1)", len(ends) >= 2, {ends_name: sorted_list(ends)})
    square_zero = _square_zero(R, ends)
    report.check(f"{claim}(2)", not square_zero, {"square_zero": square_zero})
    report.check(f"{claim}(3)", not others, {"unexpected": sorted_list(others)})


def _annihilator_degree_checks(
    report: ReportBuilder,
    facts: RingFacts,
    claim: str,
    identities: frozenset[int],
    side: str,
    conventions: tuple[str, ...],
) -> None:
    """Cor 3.3 / Cor 3.5: the lone nonzero annihilator ``b`` of an identity is a hub."""
    R = facts.ring
    if not identities or R.order < ENDPOINT_THEOREM_MIN_ORDER:
        report.not_applicable(claim, f"needs a proper {side} identity and at least five elements")
        return
    annihilator = left_annihilator if side == "left" else right_annihilator
    hubs = []
    for e in sorted(identities):
        ann = annihilator(R, e)
        if len(ann) == 2:
            hubs.append((e, max(ann)))
    if not hubs:
        report.not_applicable(claim, f"no {side} identity with a two-element annihilator")
        return
    claimed = R.order - 1
    for convention in conventions:
        measured = {}
        for e, b in hubs:
            degrees = degree_report(facts.graph, b)
            if side == "left":
                value = degrees.out_simple if convention == "simple" else degrees.out_with_loop
            else:
                value = degrees.in_simple if convention == "simple" else degrees.in_with_loop
            measured[str(b)] = value
        report.reconcile(
            f"{claim}[{convention}]",
            all(v == claimed for v in measured.values()),
            claimed=claimed,
            actual=measured,
        )
    for e, b in hubs:
        degrees = degree_report(facts.graph, b)
        other = degrees.in_simple if side == "left" else degrees.out_simple
        report.check(f"{claim}(positive)", other > 0, {"e": e, "b": b, "degree": other})


def _single_endpoint(report: ReportBuilder, facts: RingFacts, ends, kind: str) -> None:
    """Cor 3.9(1): a lone source (sink) forces the four-element out-star (in-star) with a loop."""
    name = f"Cor3.9(1)[{kind}]"
    if len(ends) != 1:
        report.not_applicable(name, f"{len(ends)} {kind}s")
        return
    (b,) = tuple(ends)
    expected = "out-star" if kind == "source" else "in-star"
    shape = graph_shape(facts.graph) if facts.ring.order == 4 else None
    report.check(
        name,
        shape == expected and b in facts.graph.loops,
        {"b": b, "order": facts.ring.order, "shape": shape},
    )


def _invertibility_checks(report: ReportBuilder, facts: RingFacts) -> None:
    """Prop 3.8 for every vertex with nonzero square; Cor 3.9(2) on rings with at least five elements."""
    R = facts.ring
    ep = facts.endpoints
    nonzero_square = [v for v in range(1, R.order) if R.mul[v, v] != 0]
    for kind, ends, inv in (("sink", ep.sinks, ep.inv_r), ("source", ep.sources, ep.inv_l)):
        bad = [v for v in nonzero_square if (v in ends) != (v in inv)]
        report.check(
            f"Prop3.8[{kind}]",
            not bad,
            {"element": bad[0], f"is_{kind}": bad[0] in ends} if bad else None,
        )

    if R.order < ENDPOINT_THEOREM_MIN_ORDER:
        report.not_applicable("Cor3.9(2)", "needs at least five elements")
        return
    for kind, ends, inv in (("sink", ep.sinks, ep.inv_r), ("source", ep.sources, ep.inv_l)):
        report.check(
            f"Cor3.9(2)[{kind}]",
            ends == inv,
            {f"{kind}s": sorted_list(ends), "invertible": sorted_list(inv)},
        )
        if ends:
            square_zero = _square_zero(R, ends)
            report.check(
                f"Cor3.9(2)[{kind}-count]",
                len(ends) >= 2 and not square_zero,
                {f"{kind}s": sorted_list(ends), "square_zero": square_zero},
            )


def check_section_3(
    R: FiniteRing,
    facts: RingFacts | None = None,
    conventions: tuple[str, ...] = ("simple", "loop"),
) -> TheoremReport:
    """Endpoint counts, hub degrees and the strong-invertibility characterisation."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Sec3", R)
    sets, ep = facts.sets, facts.endpoints

    _identity_side_checks(
        report, facts, "Prop3.2", sets.proper_left_identities, ep.sinks, ep.sources, "left"
    )
    _identity_side_checks(
        report, facts, "Prop3.4", sets.proper_right_identities, ep.sources, ep.sinks, "right"
    )
    _annihilator_degree_checks(
        report, facts, "Cor3.3", sets.proper_left_identities, "left", conventions
    )
    _annihilator_degree_checks(
        report, facts, "Cor3.5", sets.proper_right_identities, "right", conventions
    )

    if R.order >= ENDPOINT_THEOREM_MIN_ORDER:
        both = bool(ep.sinks) and bool(ep.sources)
        report.check(
            "Cor3.6(1)",
            not both,
            {"sinks": sorted_list(ep.sinks), "sources": sorted_list(ep.sources)},
        )
    else:
        report.not_applicable("Cor3.6(1)", "needs at least five elements")
    network = is_network(facts.graph)
    report.check("Cor3.6(2)", not network, {"network": network})

    _invertibility_checks(report, facts)
    _single_endpoint(report, facts, ep.sources, "source")
    _single_endpoint(report, facts, ep.sinks, "sink")
    report.measure(sinks=len(ep.sinks), sources=len(ep.sources))
    return report.build()

