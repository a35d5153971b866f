"""
Exhaustive verification of the multiplier bounds and the classification
claim, with counterexamples reported rather than assumed away.
"""
from nilmult.classify.cases import (
    Status, ClassificationCase, InequalityFinding, BoundCase, OracleComparison, VerificationReport,
)
from nilmult.classify.checks import (
    max_exponent, exponent_table, solutions, bound_case, bound_check, classification_cases,
    theorem34_report, lemma_check, inequality_III_check, inequality_III_domain, sandwich_check,
)
from nilmult.classify.suites import SUITES, run_suite, suite_ranges

__all__ = [
    "Status", "ClassificationCase", "InequalityFinding", "BoundCase", "OracleComparison",
    "VerificationReport",
    "max_exponent", "exponent_table", "solutions", "bound_case", "bound_check",
    "classification_cases", "theorem34_report", "lemma_check", "inequality_III_check",
    "inequality_III_domain", "sandwich_check",
    "SUITES", "run_suite", "suite_ranges",
]
