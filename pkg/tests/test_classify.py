"""
Unit tests for the bound, classification and inequality checks and the
verification suites.
"""
import random
import unittest

from nilmult.abelian import (
    PGroupPartition,
    abelian_groups_up_to,
    elementary,
    hook_partition,
    instantiate,
    partitions,
)
from nilmult.classify import (
    BoundCase,
    ClassificationCase,
    InequalityFinding,
    Status,
    VerificationReport,
    bound_check,
    exponent_table,
    inequality_III_check,
    inequality_III_domain,
    lemma_check,
    max_exponent,
    run_suite,
    sandwich_check,
    solutions,
    theorem34_report,
)
from nilmult.errors import DomainError
from nilmult.hallbasis import witt
from nilmult.multiplier import multiplier_order, multiplier_order_exponent, render_structure
from nilmult.oracle import schur_oracle


def P(*parts):
    return PGroupPartition(parts)


class TestBound(unittest.TestCase):
    """Upper bound witt(c+1, n) and its unique maximizer."""

    def test_max_exponent(self):
        for n in range(0, 12):
            self.assertEqual(max_exponent(n, 1), n * (n - 1) // 2)
        self.assertEqual(max_exponent(1, 3), 0)
        self.assertEqual(max_exponent(3, 2), 8)
        with self.assertRaises(DomainError):
            max_exponent(3, 0)

    def test_bound_check_four(self):
        """Test that n=4, c=1 peaks at 6, only at (1,1,1,1)."""
        report = bound_check(4, 1)
        case = report.cases[0]
        self.assertIsInstance(case, BoundCase)
        self.assertEqual(case.bound, 6)
        self.assertEqual(case.max_found, 6)
        self.assertEqual(case.maximizers, (P(1, 1, 1, 1),))
        self.assertEqual(case.violations, ())
        self.assertEqual(case.status, Status.CONFIRMED)

    def test_bound_check_one(self):
        for c in range(1, 5):
            case = bound_check(1, c).cases[0]
            self.assertEqual(case.max_found, 0)
            self.assertEqual(case.maximizers, (P(1),))
            self.assertEqual(case.status, Status.CONFIRMED)

    def test_bound_holds_with_unique_maximizer(self):
        """Test every partition of n <= 25 at c <= 4 against the bound."""
        for n in range(1, 26):
            for c in range(1, 5):
                case = bound_check(n, c).cases[0]
                self.assertEqual(case.violations, (), (n, c))
                self.assertEqual(case.maximizers, (elementary(n),), (n, c))
                self.assertEqual(case.status, Status.CONFIRMED, (n, c))

    def test_cyclic_partition_is_zero(self):
        for n in range(1, 10):
            self.assertEqual(multiplier_order_exponent(P(n), 3), 0)


def report_is_clean(report):
    return report.summary["counterexamples"] == 0


class TestSolutions(unittest.TestCase):
    """Exhaustive exponent search."""

    def test_documented_searches(self):
        self.assertEqual(solutions(4, 1, 3), [P(2, 1, 1)])
        self.assertEqual(solutions(4, 1, 2), [P(2, 2)])
        self.assertEqual(solutions(6, 1, 3), [P(4, 1, 1), P(3, 3)])

    def test_zero_exponent_is_cyclic(self):
        for n in range(1, 12):
            for c in range(1, 4):
                self.assertEqual(solutions(n, c, 0), [P(n)])

    def test_exponent_table(self):
        rows = exponent_table(4, 1)
        self.assertEqual([(lam.parts, e) for lam, e in rows], [
            ((4,), 0), ((3, 1), 1), ((2, 2), 2), ((2, 1, 1), 3), ((1, 1, 1, 1), 6),
        ])
        exponents = [e for _, e in exponent_table(7, 2)]
        self.assertEqual(exponents, sorted(exponents))


class TestTheorem34Report(unittest.TestCase):
    """Hook partitions and the uniqueness claim."""

    def test_forward_identity(self):
        """Test that the hook partition always reaches witt(c+1, n-t)."""
        for n in range(1, 31):
            for t in range(n):
                lam = hook_partition(n, t)
                for c in range(1, 6):
                    self.assertEqual(multiplier_order_exponent(lam, c), witt(c + 1, n - t), (n, t, c))

    def test_four_all_confirmed(self):
        report = theorem34_report(4, 1)
        self.assertEqual(report.summary, {"total": 4, "confirmed": 4, "counterexamples": 0})
        self.assertEqual([case.target_exponent for case in report.cases], [6, 3, 1, 0])
        self.assertEqual([case.solutions for case in report.cases],
                         [(P(1, 1, 1, 1),), (P(2, 1, 1),), (P(3, 1),), (P(4),)])

    def test_five_all_confirmed(self):
        report = theorem34_report(5, 1)
        self.assertEqual(report.summary["confirmed"], 5)

    def test_six_has_counterexamples(self):
        """Test that exponent 3 at n=6, c=1 is reached by (4,1,1) and (3,3)."""
        report = theorem34_report(6, 1)
        by_t = {case.t: case for case in report.cases}
        case = by_t[3]
        self.assertIsInstance(case, ClassificationCase)
        self.assertEqual(case.target_exponent, 3)
        self.assertEqual(case.expected, P(4, 1, 1))
        self.assertEqual(case.solutions, (P(4, 1, 1), P(3, 3)))
        self.assertTrue(case.forward_holds)
        self.assertEqual(case.status, Status.COUNTEREXAMPLE)
        self.assertEqual(by_t[2].solutions, (P(3, 1, 1, 1), P(2, 2, 2)))
        self.assertEqual(report.summary, {"total": 6, "confirmed": 4, "counterexamples": 2})

    def test_counterexample_confirmed_by_schur_oracle(self):
        """Test both solutions at prime 2 with the gcd oracle."""
        self.assertEqual(render_structure(schur_oracle([8, 8])), "Z_8")
        self.assertEqual(schur_oracle([8, 8]).order().exponent(2), 3)
        self.assertEqual(schur_oracle([16, 2, 2]).order().exponent(2), 3)

    def test_last_t_is_cyclic(self):
        for n in range(1, 12):
            for c in range(1, 4):
                case = theorem34_report(n, c).cases[-1]
                self.assertEqual(case.t, n - 1)
                self.assertEqual(case.solutions, (P(n),))
                self.assertEqual(case.status, Status.CONFIRMED)

    def test_base_cases(self):
        """Test n = 1 and n = 2 explicitly."""
        for c in range(1, 5):
            self.assertTrue(report_is_clean(theorem34_report(1, c)))
            self.assertTrue(report_is_clean(theorem34_report(2, c)))

    def test_solutions_reproduced_at_prime_two(self):
        """Test every listed solution through the concrete multiplier."""
        for n in range(1, 11):
            for c in range(1, 4):
                for case in theorem34_report(n, c).cases:
                    self.assertTrue(case.forward_holds)
                    for lam in case.solutions:
                        order = multiplier_order(instantiate(lam, 2), c)
                        self.assertEqual(order.exponent(2), case.target_exponent)

    def test_solution_lists_are_complete(self):
        for n in range(1, 11):
            for case in theorem34_report(n, 1).cases:
                expected = [lam for lam in partitions(n)
                            if multiplier_order(instantiate(lam, 2), 1).exponent(2) == case.target_exponent]
                self.assertEqual(list(case.solutions), expected)

    def test_deterministic(self):
        self.assertEqual(theorem34_report(8, 2).to_dict(), theorem34_report(8, 2).to_dict())


class TestInequalities(unittest.TestCase):
    """Lemma, inequality (III) and the sandwich bounds."""

    def test_lemma_values(self):
        finding = lemma_check(2, 1)
        self.assertEqual((finding.lhs, finding.rhs, finding.holds), (2, 3, True))
        finding = lemma_check(1, 3)
        self.assertEqual(finding.lhs, 0)
        self.assertTrue(finding.holds)

    def test_lemma_fails_at_three(self):
        """Test 3 * witt(2, 3) = 9 against witt(2, 4) = 6."""
        finding = lemma_check(3, 1)
        self.assertEqual((finding.lhs, finding.rhs), (9, 6))
        self.assertFalse(finding.holds)
        self.assertEqual(finding.status, Status.COUNTEREXAMPLE)
        self.assertEqual(finding.parameters, {"i": 3, "c": 1})

    def test_lemma_matches_recomputation(self):
        for i in range(1, 13):
            for c in range(1, 5):
                finding = lemma_check(i, c)
                self.assertEqual(finding.lhs, i * witt(c + 1, i))
                self.assertEqual(finding.rhs, witt(c + 1, i + 1))
                self.assertEqual(finding.holds, finding.lhs < finding.rhs)

    def test_inequality_III_values(self):
        finding = inequality_III_check(3, 0, 1)
        self.assertEqual((finding.lhs, finding.rhs, finding.holds), (3, 4, True))
        finding = inequality_III_check(10, 0, 1)
        self.assertEqual((finding.lhs, finding.rhs, finding.holds), (3, 18, True))

    def test_inequality_III_fails_in_domain(self):
        finding = inequality_III_check(9, 6, 1)
        self.assertEqual((finding.lhs, finding.rhs), (9, 4))
        self.assertFalse(finding.holds)

    def test_inequality_III_domain(self):
        for args in [(2, 0, 1), (9, 7, 1), (9, 0, 0), (9, 0, 8), (9, -1, 1), (9, 9, 1)]:
            with self.assertRaises(DomainError, msg=str(args)):
                inequality_III_check(*args)
        self.assertEqual(inequality_III_domain(4), [(0, 1), (0, 2), (1, 1)])

    def test_inequality_III_matches_recomputation(self):
        for n in range(3, 41):
            for t, j in inequality_III_domain(n):
                finding = inequality_III_check(n, t, j)
                rhs = 2
                for s in range(1, j + 1):
                    rhs *= n - t - s
                self.assertEqual(finding.lhs, t + j + 2)
                self.assertEqual(finding.rhs, rhs)

    def test_sandwich_examples(self):
        upper, lower = sandwich_check(P(2, 2), 1)
        self.assertEqual((lower.lhs, lower.rhs, upper.lhs, upper.rhs), (2, 2, 2, 2))
        upper, lower = sandwich_check(P(3, 1, 1), 1)
        self.assertEqual((lower.lhs, lower.rhs), (3, 3))
        self.assertEqual((upper.lhs, upper.rhs), (3, 3))
        self.assertEqual((upper.name, lower.name), ("I", "II"))

    def test_sandwich_holds_everywhere(self):
        for n in range(2, 26):
            for c in range(1, 5):
                for lam in partitions(n):
                    if lam.k < 2:
                        continue
                    upper, lower = sandwich_check(lam, c)
                    self.assertTrue(upper.holds and lower.holds, (lam.parts, c))

    def test_sandwich_needs_two_parts(self):
        with self.assertRaises(DomainError):
            sandwich_check(P(4), 1)

    def test_finding_relation(self):
        self.assertTrue(InequalityFinding("III", {}, 4, 4, "<=").holds)
        self.assertFalse(InequalityFinding("lemma", {}, 4, 4, "<").holds)
        with self.assertRaises(ValueError):
            InequalityFinding("III", {}, 1, 2, "==")


class TestVerificationReport(unittest.TestCase):

    def setUp(self):
        self.findings = [lemma_check(i, c) for i in range(1, 6) for c in range(1, 3)]

    def test_canonical_order(self):
        shuffled = list(self.findings)
        random.Random(7).shuffle(shuffled)
        a = VerificationReport("inequalities", {}, self.findings)
        b = VerificationReport("inequalities", {}, shuffled)
        self.assertEqual(a.to_dict(), b.to_dict())

    def test_summary_matches_cases(self):
        report = VerificationReport("inequalities", {}, self.findings)
        summary = report.summary
        self.assertEqual(summary["total"], len(self.findings))
        self.assertEqual(summary["confirmed"] + summary["counterexamples"], summary["total"])
        self.assertEqual(summary["counterexamples"], len(report.counterexamples()))
        self.assertFalse(report.clean)

    def test_to_frame(self):
        report = VerificationReport("inequalities", {}, self.findings)
        frame = report.to_frame()
        self.assertEqual(len(frame), len(self.findings))
        self.assertIn("status", frame.columns)
        self.assertEqual(len(report.to_frame(only_counterexamples=True)), len(report.counterexamples()))


class TestSuites(unittest.TestCase):
    """Named verification suites."""

    def test_witt_suite(self):
        report = run_suite("witt", max_n=7, max_d=3)
        self.assertEqual(report.summary, {"total": 21, "confirmed": 21, "counterexamples": 0})

    def test_schur_suite(self):
        report = run_suite("schur", max_order=4096)
        self.assertTrue(report.clean)
        self.assertEqual(report.summary["total"], len(list(abelian_groups_up_to(4096, primes=(2, 3, 5)))))
        self.assertEqual(report.parameters["primes"], [2, 3, 5])

    def test_bound_suite(self):
        report = run_suite("bound", max_n=10, max_c=3)
        self.assertEqual(report.summary["total"], 30)
        self.assertTrue(report.clean)

    def test_thm34_suite_reports_counterexamples(self):
        report = run_suite("thm34", max_n=6, max_c=1)
        self.assertEqual(report.summary["counterexamples"], 2)
        self.assertEqual([(case.n, case.t) for case in report.counterexamples()], [(6, 2), (6, 3)])

    def test_inequalities_suite(self):
        """Test that the lemma failure is reported, not raised."""
        report = run_suite("inequalities", max_n=4, max_c=1, max_n_iii=9, max_n_sandwich=6)
        failing = [(f.name, f.parameters) for f in report.counterexamples()]
        self.assertIn(("lemma", {"i": 3, "c": 1}), failing)
        self.assertIn(("III", {"n": 9, "t": 6, "j": 1}), failing)
        self.assertFalse(any(name in ("I", "II") for name, _ in failing))

    def test_parallel_matches_serial(self):
        serial = run_suite("thm34", workers=1, max_n=7, max_c=2)
        parallel = run_suite("thm34", workers=2, max_n=7, max_c=2)
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_unknown_suite_and_range(self):
        with self.assertRaises(DomainError):
            run_suite("nope")
        with self.assertRaises(DomainError):
            run_suite("witt", max_order=10)
        with self.assertRaises(DomainError):
            run_suite("witt", max_n=0)


if __name__ == '__main__':
    unittest.main()
