"""
Hall basis generation: basic commutators stratified by weight.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from nilmult import config
from nilmult.errors import CapacityError, DomainError, InconsistencyError
from nilmult.hallbasis.commutator import BasicCommutator
from nilmult.hallbasis.witt import witt

logger = logging.getLogger("hall_basis")


@dataclass(frozen=True)
class HallBasis:
    """
    Basic commutators on d letters up to a maximum weight.

    per_weight[k - 1] holds the weight-k commutators in increasing order.
    """
    letters: int
    max_weight: int
    per_weight: Tuple[Tuple[BasicCommutator, ...], ...]

    def layer(self, k):
        """Commutators of weight k."""
        if not 1 <= k <= self.max_weight:
            raise DomainError(f"Weight {k} is outside 1..{self.max_weight}")
        return self.per_weight[k - 1]

    def counts(self):
        """Number of commutators of each weight 1..max_weight."""
        return [len(layer) for layer in self.per_weight]

    def commutators(self):
        """All commutators in increasing order."""
        return [c for layer in self.per_weight for c in layer]

    def __len__(self):
        return sum(self.counts())


def basis_size(d, max_weight):
    """Total number of basic commutators of weight <= max_weight on d letters."""
    return sum(witt(k, d) for k in range(1, max_weight + 1))


def generate_hall_basis(d, max_weight, cap=None):
    """
    Generate the basic commutators of weight 1..max_weight on d letters.

    Weight-k candidates [c_i, c_j] range over splits wt(c_i) + wt(c_j) = k
    with c_i > c_j; when c_i = [c_s, c_t] the right operand must satisfy
    c_j >= c_t. Each layer is sorted and its size checked against witt(k, d).

    Args:
        d (int): Number of letters, d >= 1
        max_weight (int): Largest weight, >= 1
        cap (int, optional): Element cap, defaults to config.MAX_BASIS_ELEMENTS

    Returns:
        HallBasis: The generated basis

    Raises:
        CapacityError: if the basis would exceed the cap
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise DomainError(f"d must be a positive integer, got {d!r}")
    if isinstance(max_weight, bool) or not isinstance(max_weight, int) or max_weight < 1:
        raise DomainError(f"max_weight must be a positive integer, got {max_weight!r}")
    if cap is None:
        cap = config.MAX_BASIS_ELEMENTS

    expected_total = basis_size(d, max_weight)
    if expected_total > cap:
        raise CapacityError(
            f"Hall basis on {d} letters up to weight {max_weight} has "
            f"{expected_total} elements, above the cap of {cap}")

    logger.info(f"Generating Hall basis: d={d}, max_weight={max_weight}, {expected_total} elements")
    layers = [[BasicCommutator.leaf(i) for i in range(1, d + 1)]]

    for k in range(2, max_weight + 1):
        layer = []
        # c_i > c_j forces wt(c_i) >= wt(c_j)
        for left_weight in range(k - 1, (k - 1) // 2, -1):
            right_weight = k - left_weight
            for left in layers[left_weight - 1]:
                floor = None if left.is_leaf else left.right
                for right in layers[right_weight - 1]:
                    if not left > right:
                        continue
                    if floor is not None and right < floor:
                        continue
                    layer.append(BasicCommutator.bracket(left, right))
        layer.sort()
        expected = witt(k, d)
        if len(layer) != expected:
            raise InconsistencyError(
                f"Generated {len(layer)} commutators of weight {k} on {d} letters, Witt formula gives {expected}")
        logger.debug(f"Weight {k}: {len(layer)} basic commutators")
        layers.append(layer)

    return HallBasis(
        letters=d,
        max_weight=max_weight,
        per_weight=tuple(tuple(layer) for layer in layers),
    )
