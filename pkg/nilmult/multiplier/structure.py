"""
c-nilpotent multipliers of finite abelian groups.

For G = Z_{n_1} + ... + Z_{n_k} with n_{i+1} | n_i and k >= 2,

    M^(c)(G) = Z_{n_2}^(b_2) + Z_{n_3}^(b_3 - b_2) + ... + Z_{n_k}^(b_k - b_{k-1})

where b_i is the number of basic commutators of weight c+1 on i letters.
Cyclic and trivial groups have trivial multiplier.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from nilmult.abelian.groups import FactoredOrder, InvariantFactorForm
from nilmult.abelian.partitions import PGroupPartition
from nilmult.errors import DomainError, InconsistencyError
from nilmult.hallbasis.witt import witt

logger = logging.getLogger("multiplier")


@dataclass(frozen=True)
class MultiplierStructure:
    """
    Direct sum of cyclic groups, kept in the shape it was computed in.

    factors holds (order, multiplicity) pairs; order is a FactoredOrder so
    symbolic p-power orders and concrete orders share one representation.
    """
    factors: Tuple[Tuple[FactoredOrder, int], ...] = ()

    def __post_init__(self):
        kept = []
        for order, multiplicity in self.factors:
            if multiplicity < 0:
                raise InconsistencyError(f"Negative multiplicity {multiplicity} for Z_{order}")
            if multiplicity == 0 or order.is_trivial():
                continue
            kept.append((order, multiplicity))
        object.__setattr__(self, "factors", tuple(kept))

    def rank(self):
        """Total number of cyclic summands."""
        return sum(m for _, m in self.factors)

    def order(self):
        """|M| as prime -> sum of multiplicity * valuation."""
        pairs = []
        for order, multiplicity in self.factors:
            pairs.extend((p, e * multiplicity) for p, e in order.exponents)
        return FactoredOrder(tuple(pairs))

    def primary_multiset(self):
        """
        Isomorphism invariant: ((prime, exponent), count) pairs, sorted.

        Two structures describe isomorphic groups exactly when their
        primary multisets agree.
        """
        counts = Counter()
        for order, multiplicity in self.factors:
            for p, e in order.exponents:
                counts[(p, e)] += multiplicity
        return tuple(sorted(counts.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])))

    def is_trivial(self):
        return not self.factors

    def __str__(self):
        return render_structure(self)


def primary_multiset(structure):
    """Sorted ((prime, exponent), count) pairs of a structure."""
    return structure.primary_multiset()


def isomorphic(a, b):
    """True when two structures have the same primary decomposition."""
    return a.primary_multiset() == b.primary_multiset()


def render_order(order):
    """Decimal for concrete orders, p^e for symbolic ones."""
    if any(isinstance(p, str) for p, _ in order.exponents):
        return str(order)
    value = 1
    for p, e in order.exponents:
        value *= p ** e
    return str(value)


def render_structure(structure):
    """Text such as "Z_2 ⊕ Z_2^(2)"; "trivial" for the zero group."""
    if structure.is_trivial():
        return "trivial"
    pieces = []
    for order, multiplicity in structure.factors:
        label = render_order(order)
        if any(isinstance(p, str) for p, _ in order.exponents):
            label = "{" + label + "}"
        piece = f"Z_{label}"
        if multiplicity > 1:
            piece += f"^({multiplicity})"
        pieces.append(piece)
    return " ⊕ ".join(pieces)


def _check_class(c):
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise DomainError(f"Nilpotency class must be a positive integer, got {c!r}")


def b_sequence(c, k):
    """
    b_1..b_k with b_i = witt(c+1, i).

    Args:
        c (int): Nilpotency class, c >= 1
        k (int): Number of letters, k >= 0

    Returns:
        list: [b_1, ..., b_k]; b_1 is always 0
    """
    _check_class(c)
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    return [witt(c + 1, i) for i in range(1, k + 1)]


@lru_cache(maxsize=None)
def _increments(c, k):
    """Multiplicities b_2, b_3 - b_2, ..., b_k - b_{k-1}."""
    b = b_sequence(c, k)
    increments = [b[1]]
    for i in range(2, k):
        step = b[i] - b[i - 1]
        if step < 0:
            raise InconsistencyError(f"witt({c + 1}, i) decreases from i={i} to i={i + 1}")
        increments.append(step)
    return tuple(increments)


def _structure_from_orders(orders, c):
    if len(orders) < 2:
        return MultiplierStructure(())
    increments = _increments(c, len(orders))
    return MultiplierStructure(tuple(zip(orders[1:], increments)))


def nilpotent_multiplier(g, c):
    """
    M^(c)(G) of a finite abelian group.

    Args:
        g (InvariantFactorForm): Group with n_{i+1} | n_i
        c (int): Nilpotency class, c >= 1

    Returns:
        MultiplierStructure: Z_{n_2}^(b_2) + ... + Z_{n_k}^(b_k - b_{k-1}),
            trivial when k <= 1
    """
    _check_class(c)
    if not isinstance(g, InvariantFactorForm):
        raise DomainError(f"Expected an InvariantFactorForm, got {type(g).__name__}")
    orders = [FactoredOrder.of(n) for n in g.factors]
    logger.debug(f"Computing M^({c}) for invariant factors {g}")
    return _structure_from_orders(orders, c)


def symbolic_multiplier(g, c):
    """M^(c) of the symbolic p-group Z_{p^a1} + ... + Z_{p^ak}."""
    _check_class(c)
    label = g.prime if isinstance(g.prime, str) else "p"
    orders = [FactoredOrder(((label, a),)) for a in g.parts]
    return _structure_from_orders(orders, c)


def multiplier_order_exponent(g, c):
    """
    p-exponent of |M^(c)(G)| for an abelian p-group given as a partition.

    Args:
        g (PGroupPartition): alpha_1 >= ... >= alpha_k
        c (int): Nilpotency class, c >= 1

    Returns:
        int: alpha_2*b_2 + sum over i = 3..k of alpha_i*(b_i - b_{i-1}); 0 when k <= 1
    """
    _check_class(c)
    if not isinstance(g, PGroupPartition):
        g = PGroupPartition(tuple(g))
    if g.k < 2:
        return 0
    increments = _increments(c, g.k)
    return sum(a * step for a, step in zip(g.parts[1:], increments))


def multiplier_order(g, c):
    """|M^(c)(G)| in factored form."""
    return nilpotent_multiplier(g, c).order()
