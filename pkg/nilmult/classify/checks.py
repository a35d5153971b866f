"""
Exhaustive checks of the multiplier-order bound, the hook-partition
classification and the inequalities used to argue it.

Nothing here assumes a claim is true: every check computes both sides and
records what it found.
"""
import logging
from collections import defaultdict
from math import prod

from nilmult.abelian.partitions import PGroupPartition, hook_partition, partitions
from nilmult.classify.cases import (
    BoundCase,
    ClassificationCase,
    InequalityFinding,
    Status,
    VerificationReport,
)
from nilmult.errors import DomainError
from nilmult.hallbasis.witt import witt
from nilmult.multiplier.structure import multiplier_order_exponent

logger = logging.getLogger("classify")


def _check_positive(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


def max_exponent(n, c):
    """Largest possible p-exponent of |M^(c)(G)| for |G| = p^n: witt(c+1, n)."""
    _check_positive("c", c)
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    return witt(c + 1, n)


def exponent_table(n, c):
    """
    Multiplier exponent of every partition of n at class c.

    Args:
        n (int): Order exponent, n >= 1
        c (int): Nilpotency class, c >= 1

    Returns:
        list: (PGroupPartition, exponent) pairs sorted by exponent; ties
            keep reverse-lexicographic partition order
    """
    _check_positive("n", n)
    _check_positive("c", c)
    rows = [(lam, multiplier_order_exponent(lam, c)) for lam in partitions(n)]
    return sorted(rows, key=lambda row: row[1])


def solutions(n, c, e):
    """All partitions of n whose class-c multiplier exponent is e."""
    _check_positive("n", n)
    _check_positive("c", c)
    return [lam for lam in partitions(n) if multiplier_order_exponent(lam, c) == e]


def bound_case(n, c):
    """Scan the partitions of n at class c against witt(c+1, n)."""
    bound = max_exponent(n, c)
    best = None
    maximizers = []
    violations = []
    for lam in partitions(n):
        e = multiplier_order_exponent(lam, c)
        if e > bound:
            violations.append(lam)
        if best is None or e > best:
            best = e
            maximizers = [lam]
        elif e == best:
            maximizers.append(lam)
    case = BoundCase(n, c, bound, best, tuple(maximizers), tuple(violations))
    logger.debug(f"bound n={n} c={c}: max {best} of {bound}, {case.status.value}")
    return case


def bound_check(n, c):
    """
    Check that no abelian group of order p^n beats the elementary abelian one.

    Args:
        n (int): Order exponent, n >= 1
        c (int): Nilpotency class, c >= 1

    Returns:
        VerificationReport: A single BoundCase
    """
    _check_positive("n", n)
    _check_positive("c", c)
    return VerificationReport("bound", {"n": n, "c": c}, [bound_case(n, c)])


def classification_cases(n, c):
    """One ClassificationCase per t in 0..n-1, sharing a single scan."""
    _check_positive("n", n)
    _check_positive("c", c)
    by_exponent = defaultdict(list)
    for lam in partitions(n):
        by_exponent[multiplier_order_exponent(lam, c)].append(lam)

    cases = []
    for t in range(n):
        target = witt(c + 1, n - t)
        case = ClassificationCase(
            n=n,
            c=c,
            t=t,
            target_exponent=target,
            expected=hook_partition(n, t),
            solutions=tuple(by_exponent.get(target, ())),
        )
        if not case.forward_holds:
            logger.error(f"Hook partition {case.expected} misses exponent {target} (n={n}, c={c})")
        cases.append(case)
    return cases


def theorem34_report(n, c):
    """
    Test the claim that exponent witt(c+1, n-t) singles out (t+1, 1^(n-t-1)).

    Returns:
        VerificationReport: ClassificationCases for t = 0..n-1
    """
    cases = classification_cases(n, c)
    found = sum(1 for case in cases if case.status is Status.COUNTEREXAMPLE)
    logger.info(f"Classification n={n} c={c}: {found} counterexample(s) in {len(cases)} cases")
    return VerificationReport("thm34", {"n": n, "c": c}, cases)


def lemma_check(i, c):
    """i * b_i < b_{i+1} with b_i = witt(c+1, i), evaluated, not assumed."""
    _check_positive("i", i)
    _check_positive("c", c)
    return InequalityFinding(
        name="lemma",
        parameters={"i": i, "c": c},
        lhs=i * witt(c + 1, i),
        rhs=witt(c + 1, i + 1),
        relation="<",
    )


def inequality_III_check(n, t, j):
    """
    t + j + 2 <= 2 * (n-t-1) * (n-t-2) * ... * (n-t-j).

    Args:
        n (int): n >= 3
        t (int): 0 <= t <= n-1
        j (int): 1 <= j < n-t-1

    Returns:
        InequalityFinding: Both sides and whether the inequality holds

    Raises:
        DomainError: outside the parameter region above
    """
    for name, value in (("n", n), ("t", t), ("j", j)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{name} must be an integer, got {value!r}")
    if n < 3 or not 0 <= t <= n - 1 or not 1 <= j < n - t - 1:
        raise DomainError(f"(n, t, j) = ({n}, {t}, {j}) is outside n >= 3, 0 <= t <= n-1, 1 <= j < n-t-1")
    return InequalityFinding(
        name="III",
        parameters={"n": n, "t": t, "j": j},
        lhs=t + j + 2,
        rhs=2 * prod(n - t - s for s in range(1, j + 1)),
        relation="<=",
    )


def inequality_III_domain(n):
    """Every (t, j) with inequality_III_check(n, t, j) defined."""
    return [(t, j) for t in range(n) for j in range(1, n - t - 1)]


def sandwich_check(partition, c):
    """
    alpha_k * b_k <= exponent <= alpha_2 * b_k for a partition with k >= 2.

    Returns:
        tuple: (upper, lower) findings named "I" and "II"
    """
    _check_positive("c", c)
    if not isinstance(partition, PGroupPartition):
        partition = PGroupPartition(tuple(partition))
    if partition.k < 2:
        raise DomainError(f"Sandwich bounds need at least two parts, got {partition}")
    b_k = witt(c + 1, partition.k)
    exponent = multiplier_order_exponent(partition, c)
    params = {"n": partition.n, "c": c, "partition": list(partition.parts)}
    upper = InequalityFinding("I", dict(params), exponent, partition.part(2) * b_k, "<=")
    lower = InequalityFinding("II", dict(params), partition.part(partition.k) * b_k, exponent, "<=")
    return upper, lower
