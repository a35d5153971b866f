"""
c-nilpotent multipliers of finite abelian groups.
"""
from nilmult.multiplier.structure import (
    MultiplierStructure, b_sequence, nilpotent_multiplier, symbolic_multiplier,
    multiplier_order_exponent, multiplier_order, isomorphic, primary_multiset, render_structure, render_order,
)

__all__ = [
    "MultiplierStructure", "b_sequence", "nilpotent_multiplier", "symbolic_multiplier",
    "multiplier_order_exponent", "multiplier_order", "isomorphic", "primary_multiset", "render_structure", "render_order",
]
