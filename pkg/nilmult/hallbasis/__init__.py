"""
Hall basic commutators and the Witt formula.
"""
from nilmult.hallbasis.witt import mobius, witt, divisors, checked_pow
from nilmult.hallbasis.commutator import (
    Letter, BasicCommutator, Ordering, compare_commutators, render_commutator,
    parse_commutator, is_basic_commutator, validate_commutator, commutator_violations,
)
from nilmult.hallbasis.basis import HallBasis, generate_hall_basis, basis_size

__all__ = [
    "mobius", "witt", "divisors", "checked_pow",
    "Letter", "BasicCommutator", "Ordering", "compare_commutators", "render_commutator",
    "parse_commutator", "is_basic_commutator", "validate_commutator", "commutator_violations",
    "HallBasis", "generate_hall_basis", "basis_size",
]
