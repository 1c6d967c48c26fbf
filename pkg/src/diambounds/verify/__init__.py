"""Verification harness reproducing the sporadic-case grids and proof-step checks."""

from .report import Case, Verdict, VerificationReport, render
from .suites import (
    KNOWN_VALUES,
    SUITES,
    Appendix,
    InductionTheorem,
    KnownValue,
    appendix_grid,
    run_suite,
    verify_appendix,
    verify_index_swap,
    verify_index_swap_grid,
    verify_induction_region,
    verify_induction_step,
    verify_known_values,
)

__all__ = [
    "KNOWN_VALUES", "SUITES", "Appendix", "Case", "InductionTheorem",
    "KnownValue", "Verdict", "VerificationReport", "appendix_grid", "render",
    "run_suite", "verify_appendix", "verify_index_swap",
    "verify_index_swap_grid", "verify_induction_region",
    "verify_induction_step", "verify_known_values",
]
