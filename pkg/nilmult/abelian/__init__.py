"""
Finite abelian groups and abelian p-groups as partitions.
"""
from nilmult.abelian.partitions import (
    PGroupPartition, partitions, order_exponent, hook_partition, elementary,
)
from nilmult.abelian.groups import (
    CyclicDecomposition, InvariantFactorForm, FactoredOrder, canonicalize,
    primary_decompose, recompose, elementary_divisors, instantiate, abelian_groups_up_to,
)
from nilmult.abelian.parsing import parse_group_spec, parse_partition

__all__ = [
    "PGroupPartition", "partitions", "order_exponent", "hook_partition", "elementary",
    "CyclicDecomposition", "InvariantFactorForm", "FactoredOrder", "canonicalize",
    "primary_decompose", "recompose", "elementary_divisors", "instantiate", "abelian_groups_up_to",
    "parse_group_spec", "parse_partition",
]
