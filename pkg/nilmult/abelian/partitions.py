"""
Integer partitions as abelian p-groups of order p^n.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from nilmult.errors import DomainError


@dataclass(frozen=True)
class PGroupPartition:
    """
    Abelian p-group Z_{p^a1} + ... + Z_{p^ak} recorded as a1 >= ... >= ak.

    The prime is a label only; equality and ordering ignore it.
    """
    parts: Tuple[int, ...]
    prime: Optional[Union[int, str]] = field(default=None, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for a in parts:
            if isinstance(a, bool) or not isinstance(a, int) or a < 1:
                raise DomainError(f"Partition parts must be positive integers, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"Partition parts must be weakly decreasing, got {parts}")

    @property
    def k(self):
        """Number of cyclic factors."""
        return len(self.parts)

    @property
    def n(self):
        return sum(self.parts)

    def part(self, i):
        """alpha_i with 1-based index."""
        return self.parts[i - 1]

    def with_prime(self, prime):
        return PGroupPartition(self.parts, prime)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.parts) + ")"


def order_exponent(g):
    """Sum of the parts: |G| = p^order_exponent(G)."""
    return sum(g.parts)


def partitions(n):
    """
    Every partition of n exactly once, in reverse-lexicographic order.

    Args:
        n (int): Non-negative integer

    Yields:
        PGroupPartition: (n), then (n-1, 1), ... down to (1, ..., 1)
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    if n == 0:
        yield PGroupPartition(())
        return

    # Zoghbi-Stojmenovic ZS1; x[1..m] holds the current partition
    x = [1] * (n + 1)
    x[1] = n
    m = 1
    h = 1
    yield PGroupPartition((n,))
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield PGroupPartition(tuple(x[1:m + 1]))


def hook_partition(n, t):
    """The partition (t+1, 1^(n-t-1)) of n, for 0 <= t <= n-1."""
    if not 0 <= t <= n - 1:
        raise DomainError(f"t must satisfy 0 <= t <= n-1, got n={n}, t={t}")
    return PGroupPartition((t + 1,) + (1,) * (n - t - 1))


def elementary(n):
    """The elementary abelian partition (1^n)."""
    return PGroupPartition((1,) * n)

