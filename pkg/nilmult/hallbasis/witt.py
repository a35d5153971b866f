"""
Exact Witt-formula arithmetic: Moebius function, divisors and the count of
basic commutators of a given weight.
"""
import logging
from functools import lru_cache

from sympy import divisors as _sympy_divisors, factorint

from nilmult import config
from nilmult.errors import ArithmeticOverflowError, DomainError, InconsistencyError

logger = logging.getLogger("witt")


def _require_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")


def mobius(m):
    """
    Moebius function.

    Args:
        m (int): Positive integer

    Returns:
        int: 1 if m == 1, 0 if a squared prime divides m, (-1)^s for a
            product of s distinct primes
    """
    _require_int("m", m, 1)
    if m == 1:
        return 1
    exponents = factorint(m)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def divisors(n):
    """Positive divisors of n in increasing order."""
    _require_int("n", n, 1)
    return [int(q) for q in _sympy_divisors(n)]


def _power_too_wide(base, exponent, max_bits):
    # base^e has between e*(b-1)+1 and e*b bits, b = bit_length(base)
    if base < 2 or exponent == 0:
        return False
    width = base.bit_length()
    if exponent * (width - 1) + 1 > max_bits:
        return True
    if exponent * width <= max_bits:
        return False
    return (base ** exponent).bit_length() > max_bits


def checked_pow(base, exponent, max_bits=None):
    """
    Exact power with a width guard.

    Args:
        base (int): Non-negative base
        exponent (int): Non-negative exponent
        max_bits (int, optional): Width cap, defaults to config.MAX_INTEGER_BITS

    Returns:
        int: base ** exponent

    Raises:
        ArithmeticOverflowError: if the result would be wider than max_bits
    """
    if max_bits is None:
        max_bits = config.MAX_INTEGER_BITS
    if _power_too_wide(base, exponent, max_bits):
        raise ArithmeticOverflowError(
            f"{base}^{exponent} exceeds the {max_bits}-bit limit")
    return base ** exponent


@lru_cache(maxsize=None)
def _witt_exact(n, d, max_bits):
    total = 0
    for m in divisors(n):
        mu = mobius(m)
        if mu:
            total += mu * checked_pow(d, n // m, max_bits)
    quotient, remainder = divmod(total, n)
    if remainder:
        raise InconsistencyError(
            f"Witt sum {total} for weight {n} on {d} letters is not divisible by {n}")
    logger.debug(f"witt({n}, {d}) = {quotient}")
    return quotient


def witt(n, d, max_bits=None):
    """
    Number of basic commutators of weight n on d letters.

    Evaluates (1/n) * sum over m | n of mu(m) * d^(n/m) exactly.

    Args:
        n (int): Weight, n >= 1
        d (int): Number of letters, d >= 0
        max_bits (int, optional): Width cap for the largest power d^n

    Returns:
        int: chi_n(d)

    Raises:
        ArithmeticOverflowError: if d^n would exceed the width cap
        InconsistencyError: if the Witt sum is not divisible by n
    """
    _require_int("n", n, 1)
    _require_int("d", d, 0)
    if d == 0:
        return 0
    if max_bits is None:
        max_bits = config.MAX_INTEGER_BITS
    # d^n is the widest term of the sum
    if _power_too_wide(d, n, max_bits):
        raise ArithmeticOverflowError(
            f"witt({n}, {d}) needs {d}^{n}, which exceeds the {max_bits}-bit limit")
    return _witt_exact(n, d, max_bits)
