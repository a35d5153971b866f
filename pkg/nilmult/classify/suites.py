"""
Verification suites: named scans over parameter grids, each producing one
VerificationReport.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from nilmult import config
from nilmult.abelian.groups import InvariantFactorForm, abelian_groups_up_to, elementary_divisors
from nilmult.abelian.partitions import partitions
from nilmult.classify.cases import OracleComparison, VerificationReport
from nilmult.classify.checks import (
    bound_case,
    classification_cases,
    inequality_III_check,
    inequality_III_domain,
    lemma_check,
    sandwich_check,
)
from nilmult.errors import DomainError
from nilmult.hallbasis.witt import witt
from nilmult.multiplier.structure import isomorphic, nilpotent_multiplier, render_structure
from nilmult.oracle.lyndon import lyndon_count
from nilmult.oracle.schur import schur_oracle

logger = logging.getLogger("suites")

SUITES = ("witt", "schur", "bound", "thm34", "inequalities")


def _witt_task(n, d):
    expected = witt(n, d)
    found = lyndon_count(n, d)
    return [OracleComparison("witt-lyndon", {"n": n, "d": d}, expected, found, expected == found)]


def _schur_task(factors):
    g = InvariantFactorForm(tuple(factors))
    formula = nilpotent_multiplier(g, 1)
    oracle = schur_oracle(elementary_divisors(g))
    return [OracleComparison(
        "schur",
        {"group": list(g.factors)},
        render_structure(formula),
        render_structure(oracle),
        isomorphic(formula, oracle),
    )]


def _bound_task(n, c):
    return [bound_case(n, c)]


def _thm34_task(n, c):
    return classification_cases(n, c)


def _lemma_task(i, c):
    return [lemma_check(i, c)]


def _iii_task(n):
    return [inequality_III_check(n, t, j) for t, j in inequality_III_domain(n)]


def _sandwich_task(n, c):
    findings = []
    for lam in partitions(n):
        if lam.k >= 2:
            findings.extend(sandwich_check(lam, c))
    return findings


def _grid(name, ranges):
    """(function, args) pairs making up a suite run."""
    if name == "witt":
        return [(_witt_task, (n, d))
                for n in range(1, ranges["max_n"] + 1)
                for d in range(1, ranges["max_d"] + 1)]
    if name == "schur":
        groups = abelian_groups_up_to(ranges["max_order"], tuple(ranges["primes"]))
        return [(_schur_task, (list(g.factors),)) for g in groups]
    if name == "bound":
        return [(_bound_task, (n, c))
                for n in range(1, ranges["max_n"] + 1)
                for c in range(1, ranges["max_c"] + 1)]
    if name == "thm34":
        return [(_thm34_task, (n, c))
                for n in range(1, ranges["max_n"] + 1)
                for c in range(1, ranges["max_c"] + 1)]
    if name == "inequalities":
        tasks = [(_lemma_task, (i, c))
                 for i in range(1, ranges["max_n"] + 1)
                 for c in range(1, ranges["max_c"] + 1)]
        tasks += [(_iii_task, (n,)) for n in range(3, ranges["max_n_iii"] + 1)]
        tasks += [(_sandwich_task, (n, c))
                  for n in range(2, ranges["max_n_sandwich"] + 1)
                  for c in range(1, ranges["max_c"] + 1)]
        return tasks
    raise DomainError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")


def _call(task):
    function, args = task
    return function(*args)


def suite_ranges(name, **overrides):
    """Default ranges for a suite with any non-None overrides applied."""
    if name not in config.DEFAULT_RANGES:
        raise DomainError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")
    ranges = dict(config.DEFAULT_RANGES[name])
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in ranges:
            raise DomainError(f"Suite {name!r} has no range {key!r}")
        ranges[key] = value
    for key, value in ranges.items():
        if key != "primes" and (isinstance(value, bool) or not isinstance(value, int) or value < 1):
            raise DomainError(f"{key} must be a positive integer, got {value!r}")
    return ranges


def run_suite(name, workers=None, **overrides):
    """
    Run a verification suite.

    Args:
        name (str): One of witt, schur, bound, thm34, inequalities
        workers (int, optional): Process count, defaults to config.WORKERS
        **overrides: Range values replacing the configured defaults

    Returns:
        VerificationReport: All cases in canonical order
    """
    ranges = suite_ranges(name, **overrides)
    if workers is None:
        workers = config.WORKERS
    tasks = _grid(name, ranges)
    logger.info(f"Running suite {name} with {ranges}: {len(tasks)} tasks, {workers} worker(s)")

    cases = []
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for batch in executor.map(_call, tasks, chunksize=max(1, len(tasks) // (4 * workers))):
                cases.extend(batch)
    else:
        for task in tasks:
            cases.extend(_call(task))

    parameters = {k: list(v) if isinstance(v, tuple) else v for k, v in ranges.items()}
    report = VerificationReport(name, parameters, cases)
    logger.info(f"Suite {name}: {report.summary}")
    return report
