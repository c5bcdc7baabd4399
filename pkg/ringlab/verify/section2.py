"""Connectedness, diameter and decomposition claims.

Each checker takes a ring (and optionally shared :class:`RingFacts`) and
returns one :class:`TheoremReport`.  Hypotheses that are not met produce
not-applicable sub-checks rather than silent passes.
"""

from __future__ import annotations

import logging

import numpy as np

from ..errors import InternalInvariantViolation
from ..graph.build import build_graph
from ..graph.endpoints import claimed_edge_count
from ..graph.metrics import (
    LISTED_SHAPES,
    degree_report,
    distances,
    graph_shape,
    strongly_connected,
)
from ..rings.builders import decompose, decompose_right, subring
from ..rings.types import FiniteRing
from .types import ReportBuilder, RingFacts, TheoremReport, facts_for, sorted_list

logger = logging.getLogger(__name__)


def check_lemma_2_1(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Left zero-divisors are right zero-divisors when right identities are two-sided."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Lem2.1", R)
    sets = facts.sets
    one_sided_right = sets.right_identities - {sets.two_sided_identity}
    if one_sided_right:
        note = f"right identity {min(one_sided_right)} is not two-sided"
        report.not_applicable("Lem2.1(1)", note)
        report.not_applicable("Lem2.1(2)", note)
        return report.build()

    extra = sets.left_zero_divisors - sets.right_zero_divisors
    report.check("Lem2.1(1)", not extra, {"left_not_right": sorted_list(extra)})

    if R.order < 5:
        report.not_applicable("Lem2.1(2)", "needs at least five elements")
        return report.build()
    zero = R.mul == 0
    tails = [a for a in facts.graph.vertices if facts.graph.out_adj[a]]
    for a in tails:
        # c != 0, c != a with c*a = 0
        killers = int(zero[1:, a].sum()) - int(zero[a, a])
        if killers == 0:
            report.check("Lem2.1(2)", False, {"a": a, "b": facts.graph.out_adj[a][0]})
            break
    else:
        report.check("Lem2.1(2)", True)
    return report.build()


def check_lemma_2_2_and_list(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Symmetric annihilation for tiny rings and membership of Γ(R) in the small-graph list."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Lem2.2", R)
    if not 2 <= R.order <= 4:
        report.not_applicable("Lem2.2", "only rings with two to four elements")
        report.not_applicable("List2.2", "only rings with two to four elements")
        return report.build()

    shape = graph_shape(facts.graph)
    report.measure(shape=shape)
    report.check("List2.2", shape in LISTED_SHAPES[R.order], {"shape": shape})

    if not facts.sets.identities_two_sided:
        report.not_applicable("Lem2.2", "R has a proper one-sided identity")
        return report.build()
    zero = R.mul == 0
    asymmetric = np.argwhere(zero & ~zero.T)
    asymmetric = [(int(a), int(b)) for a, b in asymmetric if a != b and a and b]
    witness = {"a": asymmetric[0][0], "b": asymmetric[0][1]} if asymmetric else None
    report.check("Lem2.2", not asymmetric, witness)
    return report.build()


def check_prop_2_3(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Every edge ``a -> b`` extends to a walk ``c -> a -> b -> d`` with ``c != a``, ``d != b``."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Prop2.3", R)
    if not facts.sets.identities_two_sided:
        report.not_applicable("Prop2.3", "R has a proper one-sided identity")
        return report.build()
    edges = facts.graph.edges()
    if not edges:
        report.not_applicable("Prop2.3", "Γ(R) has no edges")
        return report.build()
    zero = R.mul == 0
    nonzero = np.arange(1, R.order)
    for a, b in edges:
        has_c = bool((zero[nonzero, a] & (nonzero != a)).any())
        has_d = bool((zero[b, nonzero] & (nonzero != b)).any())
        if not (has_c and has_d):
            report.check("Prop2.3", False, {"a": a, "b": b, "c_found": has_c, "d_found": has_d})
            break
    else:
        report.check("Prop2.3", True)
    report.measure(edges=len(edges))
    return report.build()


def check_theorem_2_4(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Strong connectivity, two-sided identities and absence of endpoints are equivalent."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Thm2.4", R)
    connected = strongly_connected(facts.graph)
    two_sided = facts.sets.identities_two_sided
    no_endpoints = not facts.endpoints.sinks and not facts.endpoints.sources
    report.measure(connected=connected, identities_two_sided=two_sided, no_endpoints=no_endpoints)
    report.check(
        "Thm2.4",
        connected == two_sided == no_endpoints,
        {"connected": connected, "identities_two_sided": two_sided, "no_endpoints": no_endpoints},
    )
    if connected:
        diameter = facts.distances.diameter
        report.measure(diameter=diameter)
        report.check("Thm2.4(d<=3)", diameter <= 3, {"diameter": diameter})
    else:
        report.not_applicable("Thm2.4(d<=3)", "Γ(R) is not strongly connected")
    return report.build()


def check_left_identity_decomposition(
    R: FiniteRing, facts: RingFacts | None = None
) -> TheoremReport:
    """``R = R_e (+) I_e`` with its four structural claims, for every proper one-sided identity."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Decomp", R)
    sides = (
        ("left", facts.sets.proper_left_identities, decompose),
        ("right", facts.sets.proper_right_identities, decompose_right),
    )
    sizes = {}
    for side, identities, split in sides:
        if not identities:
            report.not_applicable(f"Decomp[{side}]", f"no proper {side} identity")
            continue
        failure = None
        for e in sorted(identities):
            try:
                parts = split(R, e)
            except InternalInvariantViolation as exc:
                failure = {"e": e, "error": str(exc)}
                break
            sizes[f"{side}:{e}"] = [len(parts.subring), len(parts.ideal)]
        report.check(f"Decomp[{side}]", failure is None, failure)
    if sizes:
        report.measure(subring_and_ideal_sizes=sizes)
    return report.build()


def check_prop_2_5(
    R: FiniteRing, facts: RingFacts | None = None, conventions: tuple[str, ...] = ("simple", "loop")
) -> TheoremReport:
    """Vertex count, ideal out-degree and the edge-count formula for a proper left identity."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Prop2.5", R)
    identities = facts.sets.proper_left_identities
    if not identities:
        for part in ("(1)", "(2)", "(3)"):
            report.not_applicable(f"Prop2.5{part}", "no proper left identity")
        return report.build()
    e = min(identities)
    parts = decompose(R, e)
    n_vertices = len(facts.graph.vertices)
    report.measure(e=e, vertices=n_vertices, ideal=len(parts.ideal), subring=len(parts.subring))
    report.check(
        "Prop2.5(2)",
        n_vertices == R.order - 1 == len(parts.subring) * len(parts.ideal) - 1,
        {"vertices": n_vertices, "order": R.order},
    )

    ideal_star = sorted(parts.ideal - {0})
    degrees = [degree_report(facts.graph, a) for a in ideal_star]
    claimed_degree = R.order + 1
    for convention in conventions:
        actual = sorted(
            {d.out_simple if convention == "simple" else d.out_with_loop for d in degrees}
        )
        report.reconcile(
            f"Prop2.5(1)[{convention}]",
            actual == [claimed_degree],
            claimed=claimed_degree,
            actual=actual,
        )
    # the mutual-pair reading of the edge formula has no degree counterpart
    for convention in dict.fromkeys((*conventions, "cycle")):
        counts = claimed_edge_count(R, e, convention)
        report.reconcile(
            f"Prop2.5(3)[{convention}]",
            counts.matches,
            claimed=counts.claimed,
            actual=counts.actual,
        )
    return report.build()


def _proper_identity(facts: RingFacts) -> tuple[str, int] | None:
    if facts.sets.proper_left_identities:
        return "left", min(facts.sets.proper_left_identities)
    if facts.sets.proper_right_identities:
        return "right", min(facts.sets.proper_right_identities)
    return None


def check_prop_2_6(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """With a proper one-sided identity every finite distance is at most 6."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Prop2.6", R)
    if _proper_identity(facts) is None:
        report.not_applicable("Prop2.6", "no proper one-sided identity")
        return report.build()
    dist = facts.distances
    report.measure(max_finite_distance=dist.max_finite)
    matrix = dist.distances
    too_far = np.argwhere(np.isfinite(matrix) & (matrix > 6))
    witness = None
    if too_far.size:
        i, j = too_far[0]
        witness = {"x": dist.vertices[i], "y": dist.vertices[j], "d": int(matrix[i, j])}
    report.check("Prop2.6", witness is None, witness)
    return report.build()


def check_cor_2_7(R: FiniteRing, facts: RingFacts | None = None) -> TheoremReport:
    """Max finite distance of Γ(R) is at most 3 plus that of Γ(R_e)."""
    facts = facts_for(R, facts)
    report = ReportBuilder("Cor2.7", R)
    found = _proper_identity(facts)
    if found is None:
        report.not_applicable("Cor2.7", "no proper one-sided identity")
        return report.build()
    side, e = found
    parts = decompose(R, e) if side == "left" else decompose_right(R, e)
    corner = subring(R, parts.subring, label=f"{R.label}_e")
    corner_graph = build_graph(corner)
    if not corner_graph.vertices:
        report.not_applicable("Cor2.7", f"R_e for {side} identity {e} has no zero-divisors")
        return report.build()
    bound = 3 + distances(corner_graph).max_finite
    actual = facts.distances.max_finite
    report.measure(e=e, side=side, max_finite_distance=actual, bound=bound)
    report.check("Cor2.7", actual <= bound, {"max_finite_distance": actual, "bound": bound})
    return report.build()
