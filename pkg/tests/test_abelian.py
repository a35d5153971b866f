"""
Unit tests for partitions, abelian group forms and group-spec parsing.
"""
import unittest

from sympy.functions.combinatorial.numbers import partition as partition_number

from nilmult.abelian import (
    CyclicDecomposition,
    FactoredOrder,
    InvariantFactorForm,
    PGroupPartition,
    abelian_groups_up_to,
    canonicalize,
    elementary,
    elementary_divisors,
    hook_partition,
    instantiate,
    order_exponent,
    parse_group_spec,
    parse_partition,
    partitions,
    primary_decompose,
    recompose,
)
from nilmult.errors import DomainError, GroupSpecError


class TestPartitions(unittest.TestCase):
    """Partition records and enumeration."""

    def test_partition_validation(self):
        """Test that parts must be positive and weakly decreasing."""
        with self.assertRaises(DomainError):
            PGroupPartition((1, 2))
        with self.assertRaises(DomainError):
            PGroupPartition((2, 0))
        lam = PGroupPartition((3, 1, 1))
        self.assertEqual(lam.k, 3)
        self.assertEqual(lam.n, 5)
        self.assertEqual(lam.part(2), 1)
        self.assertEqual(str(lam), "(3,1,1)")
        self.assertEqual(order_exponent(lam), 5)

    def test_prime_label_ignored_by_equality(self):
        self.assertEqual(PGroupPartition((2, 1)), PGroupPartition((2, 1)).with_prime(3))

    def test_partitions_of_four(self):
        """Test reverse-lexicographic enumeration."""
        self.assertEqual(
            [p.parts for p in partitions(4)],
            [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)],
        )

    def test_partitions_of_zero(self):
        self.assertEqual([p.parts for p in partitions(0)], [()])

    def test_counts_match_sympy(self):
        """Test p(n) against sympy up to 60."""
        for n in range(0, 61):
            self.assertEqual(sum(1 for _ in partitions(n)), partition_number(n), n)

    def test_each_partition_once_in_order(self):
        for n in range(1, 16):
            seen = [p.parts for p in partitions(n)]
            self.assertEqual(len(seen), len(set(seen)))
            self.assertTrue(all(sum(parts) == n for parts in seen))
            self.assertEqual(seen, sorted(seen, reverse=True))

    def test_negative_n(self):
        with self.assertRaises(DomainError):
            list(partitions(-1))

    def test_hook_and_elementary(self):
        self.assertEqual(hook_partition(4, 1).parts, (2, 1, 1))
        self.assertEqual(hook_partition(4, 3).parts, (4,))
        self.assertEqual(hook_partition(4, 0), elementary(4))
        with self.assertRaises(DomainError):
            hook_partition(4, 4)


class TestGroupForms(unittest.TestCase):
    """Invariant factors, primary decomposition and factored orders."""

    def test_invariant_factor_chain(self):
        self.assertEqual(InvariantFactorForm((12, 2)).k, 2)
        with self.assertRaises(DomainError):
            InvariantFactorForm((4, 6))
        with self.assertRaises(DomainError):
            InvariantFactorForm((2, 4))
        with self.assertRaises(DomainError):
            CyclicDecomposition((1, 4))

    def test_canonicalize(self):
        """Test that any cyclic decomposition reaches the divisibility chain."""
        self.assertEqual(canonicalize([2, 4]).factors, (4, 2))
        self.assertEqual(canonicalize([6, 4]).factors, (12, 2))
        self.assertEqual(canonicalize([2, 3]).factors, (6,))
        self.assertEqual(canonicalize([8, 2, 2]).factors, (8, 2, 2))
        self.assertEqual(canonicalize(CyclicDecomposition((10, 4, 6))).factors, (60, 2, 2))

    def test_canonicalize_is_idempotent(self):
        for orders in ([12, 18, 30], [4, 4, 2, 3], [5, 25, 5]):
            once = canonicalize(orders)
            self.assertEqual(canonicalize(once.factors), once)

    def test_primary_decompose_and_recompose(self):
        g = InvariantFactorForm((12, 2))
        sylow = primary_decompose(g)
        self.assertEqual(sylow, {2: PGroupPartition((2, 1)), 3: PGroupPartition((1,))})
        self.assertEqual(sylow[2].prime, 2)
        self.assertEqual(recompose(sylow), g)

    def test_elementary_divisors(self):
        self.assertEqual(elementary_divisors(InvariantFactorForm((12, 2))), [4, 2, 3])

    def test_instantiate(self):
        self.assertEqual(instantiate(PGroupPartition((3, 1)), 2).factors, (8, 2))
        self.assertEqual(instantiate(PGroupPartition((1, 1)), 5).factors, (5, 5))
        with self.assertRaises(DomainError):
            instantiate(PGroupPartition((1,)), 4)

    def test_factored_order(self):
        """Test factoring, multiplying and rendering orders."""
        order = FactoredOrder.of(24)
        self.assertEqual(order.exponents, ((2, 3), (3, 1)))
        self.assertEqual(str(order), "2^3 · 3")
        self.assertEqual(str(FactoredOrder.of(1)), "1")
        self.assertEqual((order * FactoredOrder.of(6)).to_dict(), {2: 4, 3: 2})
        self.assertEqual(str(FactoredOrder((("p", 2),))), "p^2")
        self.assertEqual(order.exponent(5), 0)
        self.assertEqual(InvariantFactorForm((12, 2)).order(), FactoredOrder.of(24))

    def test_groups_up_to_order_16_over_two(self):
        """Test that every 2-group of order <= 16 appears exactly once."""
        groups = list(abelian_groups_up_to(16, primes=(2,)))
        self.assertEqual(len(groups), sum(partition_number(e) for e in range(5)))
        self.assertEqual(len(set(groups)), len(groups))
        self.assertIn(InvariantFactorForm(()), groups)
        self.assertIn(InvariantFactorForm((4, 2, 2)), groups)

    def test_groups_up_to_order_12(self):
        groups = list(abelian_groups_up_to(12, primes=(2, 3)))
        self.assertEqual(len(groups), sum(partition_number(a) * partition_number(b)
                                          for a in range(4) for b in range(3) if 2 ** a * 3 ** b <= 12))
        self.assertEqual(len(groups), 13)
        self.assertIn(InvariantFactorForm((6, 2)), groups)
        for g in groups:
            total = 1
            for n in g.factors:
                total *= n
            self.assertLessEqual(total, 12)


class TestParsing(unittest.TestCase):
    """Group and partition text."""

    def test_concrete(self):
        g = parse_group_spec("8, 2,2")
        self.assertIsInstance(g, CyclicDecomposition)
        self.assertEqual(g.orders, (8, 2, 2))

    def test_symbolic(self):
        g = parse_group_spec("p^3,p,p")
        self.assertIsInstance(g, PGroupPartition)
        self.assertEqual(g.parts, (3, 1, 1))
        self.assertEqual(g.prime, "p")

    def test_partition(self):
        self.assertEqual(parse_partition("3,1,1").parts, (3, 1, 1))

    def test_rejects_malformed(self):
        for text in ["", "4,x", "1", "0,2", "-4", "p^0", "p^2,q", "4,²", "p^²", "١٢"]:
            with self.assertRaises(GroupSpecError, msg=text):
                parse_group_spec(text)
        for text in ["1,3", "2,,1", "a", "3,²"]:
            with self.assertRaises(GroupSpecError, msg=text):
                parse_partition(text)

    def test_spec_error_is_domain_error(self):
        with self.assertRaises(DomainError):
            parse_partition("1,2")


if __name__ == '__main__':
    unittest.main()
