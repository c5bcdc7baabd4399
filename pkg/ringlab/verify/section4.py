"""Sink(R), Sour(R) and the invertible-element semigroups.

Every claim here is stated for rings with at least five elements except the
network claim, which holds for all orders.  The endpoint identities
(Prop 4.2(3)/(4)) are also measured on smaller rings and reported as
unreconciled where they deviate.  Clauses about infinitely many endpoints
are replaced by their finite consequences.
"""

from __future__ import annotations

import logging

import numpy as np

from ..graph.build import build_graph, reverse_graph
from ..graph.endpoints import (
    ENDPOINT_THEOREM_MIN_ORDER,
    identity_semigroup,
    semigroup_closure_check,
)
from ..graph.metrics import is_network
from ..graph.types import SemigroupCheck
from ..rings.core import opposite_ring, product_set
from ..rings.types import FiniteRing
from .types import ReportBuilder, RingFacts, TheoremReport, facts_for, sorted_list

logger = logging.getLogger(__name__)

FINITE_NOTE = "finite specialization"


def _semigroup_check(
    report: ReportBuilder, name: str, members: frozenset[int], check: SemigroupCheck
) -> None:
    if not members:
        report.not_applicable(name, "empty set")
        return
    witness = {"closed": check.closed, "cancellative": check.cancellative}
    if check.witness is not None:
        witness["witness"] = list(check.witness)
    report.check(name, check.closed and check.cancellative, witness)


def _decomposition_checks(report: ReportBuilder, facts: RingFacts) -> None:
    """Prop 4.2(3) and (4), measured at every order."""
    ep = facts.endpoints
    small = facts.ring.order < ENDPOINT_THEOREM_MIN_ORDER
    record = report.reconcile if small else _as_check(report)
    note = "stated for rings with at least five elements" if small else ""

    record(
        "Prop4.2(3)",
        ep.algebraic_agreement,
        note,
        sinks=sorted_list(ep.sinks),
        sources=sorted_list(ep.sources),
        zr_minus_zl=sorted_list(ep.algebraic_sinks),
        zl_minus_zr=sorted_list(ep.algebraic_sources),
    )
    parts = (ep.sources, ep.middle, ep.sinks)
    disjoint = sum(len(p) for p in parts) == len(frozenset().union(*parts))
    covers = frozenset().union(*parts) == frozenset(facts.graph.vertices)
    record(
        "Prop4.2(4)",
        disjoint and covers,
        note,
        disjoint=disjoint,
        covers=covers,
        overlap=sorted_list((ep.sources | ep.sinks) & ep.middle),
    )


def _as_check(report: ReportBuilder):
    def record(name: str, ok: bool, note: str = "", **witness) -> None:
        report.check(name, ok, witness, note)

    return record


def _identity_semigroup_checks(report: ReportBuilder, facts: RingFacts) -> None:
    """Each ``U_e`` is closed under multiplication and has ``e`` as a two-sided identity."""
    R = facts.ring
    identities = sorted(facts.sets.proper_left_identities)
    if not identities:
        report.not_applicable("Rem4.2", "no proper left identity")
        return
    for e in identities:
        members = identity_semigroup(R, e)
        idx = np.asarray(sorted(members), dtype=np.int64)
        closed = bool(np.isin(R.mul[np.ix_(idx, idx)], idx).all())
        neutral = bool((R.mul[e, idx] == idx).all() and (R.mul[idx, e] == idx).all())
        report.check(
            "Rem4.2",
            e in members and closed and neutral,
            {"e": e, "members": sorted_list(members), "closed": closed, "neutral": neutral},
        )


def _has_generating_endpoint(R: FiniteRing, ends: frozenset[int], side: str) -> int | None:
    """An ``x`` in ``ends`` with ``x*ends == ends`` (``side="left"``) or ``ends*x == ends``."""
    for x in sorted(ends):
        image = product_set(R, [x], ends) if side == "left" else product_set(R, ends, [x])
        if image == ends:
            return x
    return None


def _identity_characterisation(
    report: ReportBuilder,
    facts: RingFacts,
    claim: str,
    corollary: str,
    side: str,
) -> None:
    """Prop 4.3 / Cor 4.4 for ``side="left"``; Prop 4.5 / Cor 4.6 for ``side="right"``."""
    R, ep = facts.ring, facts.endpoints
    if side == "left":
        identities, ends, others, inv = (
            facts.sets.proper_left_identities, ep.sinks, ep.sources, ep.inv_r,
        )
    else:
        identities, ends, others, inv = (
            facts.sets.proper_right_identities, ep.sources, ep.sinks, ep.inv_l,
        )
    generator = _has_generating_endpoint(R, ends, side) if ends else None
    has_identity = bool(identities)
    report.check(
        claim,
        has_identity == (generator is not None),
        {"has_identity": has_identity, "generator": generator},
    )
    if has_identity:
        report.check(
            f"{claim}(consequence)",
            not others and len(ends) >= 2,
            {"ends": sorted_list(ends), "others": sorted_list(others)},
        )
    if not ends:
        report.not_applicable(corollary, "no endpoints on this side")
        return
    report.check(
        corollary,
        ends == inv and not others,
        {"ends": sorted_list(ends), "invertible": sorted_list(inv), "others": sorted_list(others)},
    )


def check_section_4(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Endpoint semigroups, identity characterisations and the network claim."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Sec4", R)
    ep = facts.endpoints

    network = is_network(facts.graph)
    report.check("Cor4.9", not network, {"network": network})
    _decomposition_checks(report, facts)

    if R.order < ENDPOINT_THEOREM_MIN_ORDER:
        note = "needs at least five elements"
        for name in (
            "Prop4.2(1)", "Prop4.2(2)", "Rem4.2", "Prop4.3", "Cor4.4",
            "Prop4.5", "Cor4.6", "Prop4.7", "Cor4.8",
        ):
            report.not_applicable(name, note)
        return report.build()

    _semigroup_check(report, "Prop4.2(1)[sink]", ep.sinks, ep.sink_semigroup)
    _semigroup_check(report, "Prop4.2(1)[source]", ep.sources, ep.source_semigroup)

    for kind, inv, ends, side in (
        ("sink", ep.inv_r, ep.sinks, "left"),
        ("source", ep.inv_l, ep.sources, "right"),
    ):
        _semigroup_check(
            report, f"Prop4.2(2)[{kind}]", inv, semigroup_closure_check(inv, R, side)
        )
        if inv:
            report.check(
                f"Prop4.2(2)[{kind}-subset]",
                inv <= ends,
                {"outside": sorted_list(inv - ends)},
            )

    _identity_semigroup_checks(report, facts)
    _identity_characterisation(report, facts, "Prop4.3", "Cor4.4", "left")
    _identity_characterisation(report, facts, "Prop4.5", "Cor4.6", "right")

    two_sided = facts.sets.identities_two_sided
    no_endpoints = not ep.sinks and not ep.sources
    report.check(
        "Prop4.7",
        two_sided == no_endpoints,
        {"identities_two_sided": two_sided, "no_endpoints": no_endpoints},
        FINITE_NOTE,
    )
    if two_sided:
        report.check(
            "Cor4.8",
            no_endpoints,
            {"sinks": sorted_list(ep.sinks), "sources": sorted_list(ep.sources)},
            FINITE_NOTE,
        )
    else:
        report.not_applicable("Cor4.8", "R has a proper one-sided identity")
    report.measure(
        sinks=len(ep.sinks),
        sources=len(ep.sources),
        inv_r=len(ep.inv_r),
        inv_l=len(ep.inv_l),
    )
    return report.build()


def check_duality(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Γ of the opposite ring is Γ(R) with every edge reversed; sinks and sources swap."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Duality", R)
    op = opposite_ring(R)
    op_graph = build_graph(op)
    reversed_graph = reverse_graph(facts.graph)
    same = (
        op_graph.vertices == reversed_graph.vertices
        and op_graph.out_adj == reversed_graph.out_adj
        and op_graph.loops == reversed_graph.loops
    )
    report.check("Duality(graph)", same)
    op_facts = RingFacts(op)
    ep, op_ep = facts.endpoints, op_facts.endpoints
    report.check(
        "Duality(endpoints)",
        op_ep.sinks == ep.sources and op_ep.sources == ep.sinks,
        {"sinks": sorted_list(ep.sinks), "op_sinks": sorted_list(op_ep.sinks)},
    )
    report.check(
        "Duality(invertible)",
        op_ep.inv_r == ep.inv_l and op_ep.inv_l == ep.inv_r,
        {"inv_r": sorted_list(ep.inv_r), "op_inv_l": sorted_list(op_ep.inv_l)},
    )
    return report.build()
