"""
Schur multipliers of finite abelian groups from the direct-product formula

    M(A x B) = M(A) + M(B) + (A_ab (x) B_ab)

applied one cyclic factor at a time, with M(cyclic) = 1.
"""
from math import gcd

from nilmult.abelian.groups import CyclicDecomposition, FactoredOrder
from nilmult.errors import DomainError
from nilmult.multiplier.structure import MultiplierStructure


def tensor_cyclic(m, n):
    """Order of Z_m (x) Z_n, which is gcd(m, n)."""
    if m < 1 or n < 1:
        raise DomainError(f"Cyclic orders must be positive, got {m} and {n}")
    return gcd(m, n)


def tensor_product(a_orders, b_orders):
    """A (x) B for A, B given as lists of cyclic orders."""
    factors = []
    for a in a_orders:
        for b in b_orders:
            factors.append((FactoredOrder.of(tensor_cyclic(a, b)), 1))
    return MultiplierStructure(tuple(factors))


def direct_product_multiplier(m_a, a_orders, m_b, b_orders):
    """
    M(A x B) from M(A), M(B) and the cyclic orders of A and B.

    Args:
        m_a (MultiplierStructure): M(A)
        a_orders (list): Cyclic orders of A
        m_b (MultiplierStructure): M(B)
        b_orders (list): Cyclic orders of B

    Returns:
        MultiplierStructure: M(A) + M(B) + A (x) B
    """
    tensor = tensor_product(a_orders, b_orders)
    return MultiplierStructure(m_a.factors + m_b.factors + tensor.factors)


def schur_oracle(g):
    """
    Schur multiplier of Z_{m_1} + ... + Z_{m_k} by peeling A = Z_{m_1},
    B = the rest.

    Args:
        g (CyclicDecomposition or sequence of int): Group in any cyclic decomposition

    Returns:
        MultiplierStructure: One Z_gcd(m_i, m_j) per pair i < j, trivial
            factors dropped
    """
    if not isinstance(g, CyclicDecomposition):
        g = CyclicDecomposition(tuple(g))
    orders = list(g.orders)
    if len(orders) <= 1:
        return MultiplierStructure(())
    head, rest = orders[:1], orders[1:]
    return direct_product_multiplier(
        MultiplierStructure(()), head,
        schur_oracle(CyclicDecomposition(tuple(rest))), rest,
    )
