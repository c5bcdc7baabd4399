"""Claim registry, suite runner and report rendering.

The suite enumerates rings per order, adds the built families, runs every
checker that covers a requested claim and returns reports in a fixed order:
per order, rings in enumeration order and checkers in registry order, then
the list-realization report, then the family rings and examples.
"""

from __future__ import annotations

import json
import logging
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path

import pandas as pd
from tqdm import tqdm

from ..config import LabConfig
from ..errors import UnknownClaim
from ..graph.build import build_graph
from ..graph.metrics import LISTED_SHAPES, graph_shape
from ..rings.enumeration import enumerate_order
from ..rings.types import FiniteRing
from .families import check_examples_2_8_to_2_10, family_rings
from .section2 import (
    check_cor_2_7,
    check_lemma_2_1,
    check_lemma_2_2_and_list,
    check_left_identity_decomposition,
    check_prop_2_3,
    check_prop_2_5,
    check_prop_2_6,
    check_theorem_2_4,
)
from .section3 import check_prop_3_1, check_section_3
from .section4 import check_duality, check_section_4
from .types import ReportBuilder, RingFacts, TheoremReport, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Checker:
    key: str
    claims: tuple[str, ...]
    run: Callable[..., TheoremReport]
    takes_conventions: bool = False


CHECKERS: tuple[Checker, ...] = (
    Checker("lemma_2_1", ("Lem2.1",), check_lemma_2_1),
    Checker("lemma_2_2", ("Lem2.2", "List2.2"), check_lemma_2_2_and_list),
    Checker("prop_2_3", ("Prop2.3",), check_prop_2_3),
    Checker("theorem_2_4", ("Thm2.4",), check_theorem_2_4),
    Checker("decomposition", ("Decomp",), check_left_identity_decomposition),
    Checker("prop_2_5", ("Prop2.5",), check_prop_2_5, takes_conventions=True),
    Checker("prop_2_6", ("Prop2.6",), check_prop_2_6),
    Checker("cor_2_7", ("Cor2.7",), check_cor_2_7),
    Checker("prop_3_1", ("Prop3.1",), check_prop_3_1),
    Checker(
        "section_3",
        ("Prop3.2", "Cor3.3", "Prop3.4", "Cor3.5", "Cor3.6", "Prop3.8", "Cor3.9"),
        check_section_3,
        takes_conventions=True,
    ),
    Checker(
        "section_4",
        (
            "Prop4.2", "Rem4.2", "Prop4.3", "Cor4.4", "Prop4.5",
            "Cor4.6", "Prop4.7", "Cor4.8", "Cor4.9",
        ),
        check_section_4,
    ),
    Checker("duality", ("Duality",), check_duality),
)

EXAMPLE_CLAIMS = ("Ex2.8", "Ex2.9", "Ex2.10")

# Statements with no checker of their own, and why.
OUT_OF_SCOPE: dict[str, str] = {
    "Rem2.4": "artinian generalization of Thm2.4; finite rings are covered by Thm2.4",
    "Def3.7": "definition; implemented by strongly_right_invertible / strongly_left_invertible",
    "Def4.1": "definition; implemented by endpoint_sets",
}


def claim_registry() -> dict[str, str]:
    """Every known claim id mapped to the checker covering it, or to an out-of-scope note."""
    registry = {claim: checker.key for checker in CHECKERS for claim in checker.claims}
    registry.update({claim: "examples" for claim in EXAMPLE_CLAIMS})
    registry.update({claim: f"out of scope: {why}" for claim, why in OUT_OF_SCOPE.items()})
    return registry


def _resolve_claims(claims: Iterable[str] | None) -> frozenset[str] | None:
    if claims is None:
        return None
    wanted = frozenset(claims)
    registry = claim_registry()
    unknown = sorted(c for c in wanted if c not in registry)
    if unknown:
        raise UnknownClaim(f"unknown claim id(s): {', '.join(unknown)}")
    skipped = sorted(c for c in wanted if c in OUT_OF_SCOPE)
    if skipped:
        logger.warning("No checker for out-of-scope claim(s): %s", ", ".join(skipped))
    return wanted


def _selected(claims: frozenset[str] | None) -> tuple[Checker, ...]:
    if claims is None:
        return CHECKERS
    return tuple(c for c in CHECKERS if claims.intersection(c.claims))


def _check_ring(job: tuple[FiniteRing, str, tuple[str, ...], tuple[str, ...] | None]):
    """Run the named checkers on one ring; module-level so worker processes can pickle it."""
    ring, group, keys, conventions = job
    facts = RingFacts(ring)
    by_key = {c.key: c for c in CHECKERS}
    reports = []
    for key in keys:
        checker = by_key[key]
        if checker.takes_conventions and conventions is not None:
            report = checker.run(ring, facts, conventions=conventions)
        else:
            report = checker.run(ring, facts)
        report.group = group
        reports.append(report)
    return reports


def _restrict(reports: list[TheoremReport], claims: frozenset[str] | None) -> list[TheoremReport]:
    if claims is None:
        return reports
    return [r.restricted(claims) for r in reports]


def _realization_report(order: int, rings: Sequence[FiniteRing]) -> TheoremReport:
    """Every listed small graph of this order occurs as Γ of some ring."""
    report = ReportBuilder("List2.2", None, scope=f"all rings of order {order}")
    seen: dict[str, str] = {}
    for ring in rings:
        shape = graph_shape(build_graph(ring))
        if shape is not None:
            seen.setdefault(shape, ring.label)
    missing = [s for s in LISTED_SHAPES[order] if s not in seen]
    report.measure(realized=seen)
    report.check("List2.2(realized)", not missing, {"missing": missing})
    built = report.build()
    built.group = f"order {order}"
    return built


def _has_failure(reports: Iterable[TheoremReport]) -> bool:
    return any(r.verdict is Verdict.FAIL for r in reports)


def run_suite(
    orders: Iterable[int],
    families: bool = True,
    claims: Iterable[str] | None = None,
    config: LabConfig | None = None,
    fail_fast: bool = False,
) -> list[TheoremReport]:
    """Check every requested claim on all rings of the given orders and on the built families.

    ``claims`` filters by claim id (see :func:`claim_registry`); a checker runs
    when it covers any requested id and its report keeps only those sub-checks.
    With ``fail_fast`` the run stops after the first report with a fail verdict.
    """
    config = config or LabConfig.from_env()
    wanted = _resolve_claims(claims)
    checkers = _selected(wanted)
    keys = tuple(c.key for c in checkers)
    conventions = config.conventions
    started = time.time()

    jobs: list[tuple[FiniteRing, str, tuple[str, ...], tuple[str, ...]]] = []
    realizations: list[TheoremReport] = []
    for order in orders:
        rings = enumerate_order(order, dedup=True, config=config)
        if keys:
            jobs.extend((ring, f"order {order}", keys, conventions) for ring in rings)
        if order in LISTED_SHAPES and (wanted is None or "List2.2" in wanted):
            realizations.append(_realization_report(order, rings))
    if families and keys:
        jobs.extend((ring, "families", keys, conventions) for ring in family_rings(config))

    reports: list[TheoremReport] = []
    for batch in _run_checks(jobs, config):
        reports.extend(_restrict(batch, wanted))
        if fail_fast and _has_failure(batch):
            logger.warning("Stopping at the first failing report (--fail-fast)")
            return reports

    reports.extend(realizations)
    if families and (wanted is None or wanted.intersection(EXAMPLE_CLAIMS)):
        examples = check_examples_2_8_to_2_10(config)
        for report in examples:
            report.group = "families"
        if wanted is not None:
            examples = [r for r in examples if r.claim_id in wanted]
        reports.extend(examples)

    counts = summarize(reports)
    logger.info(
        "Suite finished: %d report(s) over %d ring(s) in %.2fs (%s)",
        len(reports),
        len(jobs),
        time.time() - started,
        ", ".join(f"{k}={v}" for k, v in counts.items()),
    )
    unreconciled = [r for r in reports if r.verdict is Verdict.UNRECONCILED]
    if unreconciled:
        logger.warning(
            "%d report(s) with unreconciled numeric claims, e.g. %s on %s",
            len(unreconciled),
            unreconciled[0].claim_id,
            unreconciled[0].scope,
        )
    return reports


def _run_checks(jobs: list, config: LabConfig):
    progress = {"total": len(jobs), "desc": "checking", "disable": not config.progress}
    if config.shards <= 1 or len(jobs) <= 1:
        for job in tqdm(jobs, **progress):
            yield _check_ring(job)
        return
    with Pool(processes=config.shards) as pool:
        # imap keeps job order, so reports stay in canonical ring order
        yield from tqdm(pool.imap(_check_ring, jobs), **progress)


def summarize(reports: Iterable[TheoremReport]) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for report in reports:
        counts[report.verdict.value] += 1
    return counts


def exit_status(reports: Iterable[TheoremReport]) -> int:
    """1 when any report failed, else 0."""
    return 1 if _has_failure(reports) else 0


def reports_to_frame(reports: Iterable[TheoremReport], include_timing: bool = False) -> pd.DataFrame:
    rows = []
    for report in reports:
        failed = [c.name for c in report.checks if c.verdict is Verdict.FAIL]
        unreconciled = [c.name for c in report.checks if c.verdict is Verdict.UNRECONCILED]
        row = {
            "claim": report.claim_id,
            "scope": report.scope,
            "group": report.group,
            "verdict": report.verdict.value,
            "checks": len(report.checks),
            "failed": ";".join(failed),
            "unreconciled": ";".join(unreconciled),
        }
        if include_timing:
            row["seconds"] = report.seconds
        rows.append(row)
    columns = ["claim", "scope", "group", "verdict", "checks", "failed", "unreconciled"]
    if include_timing:
        columns.append("seconds")
    return pd.DataFrame(rows, columns=columns)


def summary_table(reports: Iterable[TheoremReport]) -> pd.DataFrame:
    """Verdict counts per claim id and group."""
    frame = reports_to_frame(reports)
    if frame.empty:
        return pd.DataFrame(columns=["claim", "group", *[v.value for v in Verdict]])
    table = (
        frame.groupby(["claim", "group", "verdict"], sort=True)
        .size()
        .unstack("verdict", fill_value=0)
        .reindex(columns=[v.value for v in Verdict], fill_value=0)
        .reset_index()
    )
    table.columns.name = None
    return table


def render_table(reports: Sequence[TheoremReport]) -> str:
    """Human table of verdict counts followed by the failing and unreconciled reports."""
    lines = [summary_table(reports).to_string(index=False)]
    frame = reports_to_frame(reports)
    flagged = frame[frame["verdict"].isin([Verdict.FAIL.value, Verdict.UNRECONCILED.value])]
    if not flagged.empty:
        lines += ["", flagged.to_string(index=False)]
    return "\n".join(lines) + "\n"


def reports_to_jsonl(reports: Iterable[TheoremReport], include_timing: bool = False) -> str:
    return "".join(
        json.dumps(r.to_dict(include_timing), sort_keys=True) + "\n" for r in reports
    )


def write_csv(reports: Iterable[TheoremReport], path: str | Path, include_timing: bool = False):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    reports_to_frame(reports, include_timing).to_csv(path, index=False)
    logger.info("Wrote report table to %s", path)
    return path
