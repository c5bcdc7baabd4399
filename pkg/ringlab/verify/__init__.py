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
from .suite import (
    CHECKERS,
    OUT_OF_SCOPE,
    claim_registry,
    exit_status,
    render_table,
    reports_to_frame,
    reports_to_jsonl,
    run_suite,
    summary_table,
    write_csv,
)
from .types import RingFacts, SubCheck, TheoremReport, Verdict

__all__ = [
    "CHECKERS",
    "OUT_OF_SCOPE",
    "RingFacts",
    "SubCheck",
    "TheoremReport",
    "Verdict",
    "check_cor_2_7",
    "check_duality",
    "check_examples_2_8_to_2_10",
    "check_lemma_2_1",
    "check_lemma_2_2_and_list",
    "check_left_identity_decomposition",
    "check_prop_2_3",
    "check_prop_2_5",
    "check_prop_2_6",
    "check_prop_3_1",
    "check_section_3",
    "check_section_4",
    "check_theorem_2_4",
    "claim_registry",
    "exit_status",
    "family_rings",
    "render_table",
    "reports_to_frame",
    "reports_to_jsonl",
    "run_suite",
    "summary_table",
    "write_csv",
]
