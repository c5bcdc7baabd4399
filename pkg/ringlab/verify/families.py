"""Worked examples on the built families: M_2(F_2) and the first-row rings."""

from __future__ import annotations

import logging

import numpy as np
from sympy import totient

from ..config import LabConfig
from ..graph.metrics import clique_number, mutual_graph, sinks, sources
from ..rings.builders import decompose, first_row_ring, full_matrix_ring
from ..rings.types import FiniteRing
from .types import ReportBuilder, RingFacts, TheoremReport, sorted_list

logger = logging.getLogger(__name__)

STAR_DIMENSIONS = (2, 3)
PHI_MODULI = range(2, 7)


def check_example_2_8(config: LabConfig | None = None) -> TheoremReport:
    """M_2(F_2) has diameter 2, witnessed by a common annihilator for every pair."""
    R = full_matrix_ring(2, 2, config)
    facts = RingFacts(R)
    report = ReportBuilder("Ex2.8", R)
    diameter = facts.distances.diameter
    report.measure(diameter=diameter, vertices=len(facts.graph.vertices))
    report.check("Ex2.8(diameter)", diameter == 2, {"diameter": diameter})

    zero = (R.mul[1:, 1:] == 0).astype(np.int64)
    reach = (zero + zero @ zero) > 0
    idx = np.asarray(facts.graph.vertices, dtype=np.int64) - 1
    block = reach[np.ix_(idx, idx)] | np.eye(len(idx), dtype=bool)
    missing = np.argwhere(~block)
    witness = None
    if missing.size:
        a, b = missing[0]
        witness = {"A": R.name(int(idx[a]) + 1), "B": R.name(int(idx[b]) + 1)}
    report.check("Ex2.8(witness)", witness is None, witness)
    return report.build()


def check_example_2_9(config: LabConfig | None = None) -> TheoremReport:
    """first_row(k, 2): the non-sinks form a mutual clique and point at every sink."""
    report = ReportBuilder("Ex2.9", None, scope="first_row(k,2) k=2,3")
    for k in STAR_DIMENSIONS:
        R = first_row_ring(k, 2, config)
        facts = RingFacts(R)
        G = facts.graph
        sink_set = sinks(G)
        expected = 2 ** (k - 1)
        report.check(
            f"Ex2.9(sinks)[k={k}]",
            len(sink_set) == expected and sink_set == facts.sets.left_identities,
            {"sinks": sorted_list(sink_set), "expected": expected},
            ring=R,
        )
        e = 2 ** (k - 1)  # (1, 0, ..., 0)
        ideal = len(decompose(R, e).ideal)
        report.check(f"Ex2.9(ideal)[k={k}]", ideal == expected, {"ideal": ideal}, ring=R)
        kernel = [v for v in G.vertices if v not in sink_set]
        mutual = mutual_graph(G).subgraph(kernel)
        complete = mutual.number_of_edges() == len(kernel) * (len(kernel) - 1) // 2
        spokes = all(G.has_edge(v, s) for v in kernel for s in sink_set)
        report.check(
            f"Ex2.9(kernel)[k={k}]",
            len(kernel) == expected - 1 and complete and spokes,
            {"kernel": kernel, "complete": complete, "spokes": spokes},
            ring=R,
        )
        report.measure(**{f"k={k}": {"sinks": len(sink_set), "kernel": len(kernel)}})
    return report.build()


def check_example_2_10(config: LabConfig | None = None) -> TheoremReport:
    """first_row(2, n): ``n*phi(n)`` sinks, ``|I_e| = n``, clique number ``n - 1``."""
    report = ReportBuilder("Ex2.10", None, scope="first_row(2,n) n=2..6")
    for n in PHI_MODULI:
        R = first_row_ring(2, n, config)
        G = RingFacts(R).graph
        e = n  # (1, 0)
        expected_sinks = n * int(totient(n))
        sink_count = len(sinks(G))
        ideal = len(decompose(R, e).ideal)
        omega = clique_number(G)
        source_set = sources(G)
        report.check(
            f"Ex2.10(sinks)[n={n}]",
            sink_count == expected_sinks,
            {"sinks": sink_count, "expected": expected_sinks},
            ring=R,
        )
        report.check(f"Ex2.10(ideal)[n={n}]", ideal == n, {"ideal": ideal}, ring=R)
        report.check(
            f"Ex2.10(clique)[n={n}]", omega == n - 1, {"clique_number": omega}, ring=R
        )
        if n >= 3:
            report.check(
                f"Ex2.10(sources)[n={n}]",
                not source_set,
                {"sources": sorted_list(source_set)},
                ring=R,
            )
        report.measure(
            **{f"n={n}": {"sinks": sink_count, "ideal": ideal, "clique_number": omega}}
        )
    return report.build()


def check_examples_2_8_to_2_10(config: LabConfig | None = None) -> list[TheoremReport]:
    reports = [check_example_2_8(config), check_example_2_9(config), check_example_2_10(config)]
    for report in reports:
        logger.debug("%s on %s: %s", report.claim_id, report.scope, report.verdict.value)
    return reports


def family_rings(config: LabConfig | None = None) -> list[FiniteRing]:
    """Built rings added to every suite run alongside the enumerated ones."""
    rings = [full_matrix_ring(2, 2, config)]
    rings += [first_row_ring(k, 2, config) for k in STAR_DIMENSIONS]
    rings += [first_row_ring(2, n, config) for n in PHI_MODULI if n > 2]
    return rings
