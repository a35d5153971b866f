"""
Finite abelian groups: cyclic decompositions, invariant factors, primary
decomposition and factored orders.
"""
import logging
from dataclasses import dataclass
from itertools import product, zip_longest
from math import prod
from typing import Tuple, Union

from sympy import factorint, isprime

from nilmult.abelian.partitions import PGroupPartition, partitions
from nilmult.errors import DomainError

logger = logging.getLogger("abelian")

Prime = Union[int, str]


def _check_orders(values, what):
    values = tuple(values)
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 2:
            raise DomainError(f"{what} must be integers >= 2, got {values}")
    return values


@dataclass(frozen=True)
class CyclicDecomposition:
    """Z_{m_1} + ... + Z_{m_k} in any order; () is the trivial group."""
    orders: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", _check_orders(self.orders, "Cyclic orders"))

    def __str__(self):
        return ",".join(str(m) for m in self.orders) or "trivial"


@dataclass(frozen=True)
class InvariantFactorForm:
    """Z_{n_1} + ... + Z_{n_k} with n_{i+1} | n_i."""
    factors: Tuple[int, ...]

    def __post_init__(self):
        factors = _check_orders(self.factors, "Invariant factors")
        for i in range(len(factors) - 1):
            if factors[i] % factors[i + 1]:
                raise DomainError(f"Invariant factors must form a divisibility chain, got {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def k(self):
        return len(self.factors)

    def as_decomposition(self):
        return CyclicDecomposition(self.factors)

    def order(self):
        """|G| as a FactoredOrder."""
        return FactoredOrder.product(FactoredOrder.of(n) for n in self.factors)

    def __str__(self):
        return ",".join(str(n) for n in self.factors) or "trivial"


def _prime_key(p):
    # concrete primes sort numerically, symbolic labels after them
    return (1, 0, str(p)) if isinstance(p, str) else (0, p, "")


@dataclass(frozen=True)
class FactoredOrder:
    """
    Group order kept as prime -> exponent pairs, never expanded.

    Symbolic p-groups use the label "p" as their prime.
    """
    exponents: Tuple[Tuple[Prime, int], ...] = ()

    def __post_init__(self):
        merged = {}
        for p, e in self.exponents:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise DomainError(f"Exponents must be non-negative integers, got {e!r} for {p}")
            if e:
                merged[p] = merged.get(p, 0) + e
        object.__setattr__(
            self, "exponents", tuple(sorted(merged.items(), key=lambda kv: _prime_key(kv[0]))))

    @classmethod
    def of(cls, value):
        """Factor a positive integer."""
        if value < 1:
            raise DomainError(f"Cannot factor {value}")
        return cls(tuple((int(p), int(e)) for p, e in factorint(value).items()))

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(mapping.items()))

    @classmethod
    def product(cls, orders):
        pairs = []
        for order in orders:
            pairs.extend(order.exponents)
        return cls(tuple(pairs))

    def __mul__(self, other):
        return FactoredOrder(self.exponents + other.exponents)

    def exponent(self, p):
        """Exponent of p, 0 when p does not divide the order."""
        return dict(self.exponents).get(p, 0)

    def to_dict(self):
        return {p: e for p, e in self.exponents}

    def is_trivial(self):
        return not self.exponents

    def __str__(self):
        if not self.exponents:
            return "1"
        return " · ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.exponents)


def _primary_exponents(orders):
    """prime -> decreasing tuple of exponents, merged across all orders."""
    merged = {}
    for m in orders:
        for p, e in factorint(m).items():
            merged.setdefault(int(p), []).append(int(e))
    return {p: tuple(sorted(es, reverse=True)) for p, es in sorted(merged.items())}


def canonicalize(g):
    """
    Invariant-factor form of a cyclic decomposition.

    Every cyclic order is split into prime-power components; the j-th
    invariant factor is the product over primes of the j-th largest
    component.

    Args:
        g (CyclicDecomposition or sequence of int): Group to normalize

    Returns:
        InvariantFactorForm: The divisibility-chain form of g
    """
    if not isinstance(g, CyclicDecomposition):
        g = CyclicDecomposition(tuple(g))
    columns = zip_longest(*[
        [p ** e for e in exps]
        for p, exps in _primary_exponents(g.orders).items()
    ], fillvalue=1)
    return InvariantFactorForm(tuple(prod(column) for column in columns))


def primary_decompose(g):
    """
    Split an invariant-factor form into its Sylow components.

    Args:
        g (InvariantFactorForm): Group in divisibility-chain form

    Returns:
        dict: prime -> PGroupPartition of p-adic valuations of the factors
    """
    return {
        p: PGroupPartition(exps, prime=p)
        for p, exps in _primary_exponents(g.factors).items()
    }


def recompose(mapping):
    """
    Inverse of primary_decompose.

    Args:
        mapping (dict): prime -> PGroupPartition

    Returns:
        InvariantFactorForm: The group with those Sylow components
    """
    columns = zip_longest(*[
        [p ** a for a in mapping[p].parts]
        for p in sorted(mapping)
    ], fillvalue=1)
    return InvariantFactorForm(tuple(prod(column) for column in columns))


def elementary_divisors(g):
    """Prime-power cyclic orders of g, grouped by prime, each group decreasing."""
    orders = g.factors if isinstance(g, InvariantFactorForm) else g.orders
    return [p ** e for p, exps in _primary_exponents(orders).items() for e in exps]


def instantiate(partition, prime):
    """The concrete p-group Z_{p^a1} + ... + Z_{p^ak} for a given prime."""
    if isinstance(prime, bool) or not isinstance(prime, int) or not isprime(prime):
        raise DomainError(f"{prime!r} is not a prime")
    return InvariantFactorForm(tuple(prime ** a for a in partition.parts))


def abelian_groups_up_to(max_order, primes=(2, 3, 5)):
    """
    Every abelian group of order <= max_order whose order uses only the
    given primes, each exactly once.

    Args:
        max_order (int): Largest group order
        primes (tuple): Primes allowed to divide the order

    Yields:
        InvariantFactorForm: Groups ordered by exponent vector, then by
            the reverse-lexicographic order of each Sylow partition
    """
    primes = tuple(sorted(primes))
    logger.info(f"Enumerating abelian groups of order <= {max_order} over primes {primes}")
    exponent_ranges = []
    for p in primes:
        top = 0
        while p ** (top + 1) <= max_order:
            top += 1
        exponent_ranges.append(range(top + 1))

    for vector in product(*exponent_ranges):
        if prod(p ** e for p, e in zip(primes, vector)) > max_order:
            continue
        choices = [list(partitions(e)) for e in vector]
        for combo in product(*choices):
            yield recompose({p: lam for p, lam in zip(primes, combo) if lam.parts})

