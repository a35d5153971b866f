"""
Lyndon words: an independent count of basic commutators.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from nilmult import config
from nilmult.errors import CapacityError, DomainError, InconsistencyError

logger = logging.getLogger("lyndon")


@dataclass(frozen=True)
class LyndonWord:
    """A word over 1..d that is strictly smaller than each proper rotation."""
    symbols: Tuple[int, ...]

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(str(s) for s in self.symbols) if max(self.symbols, default=0) < 10 \
            else ",".join(str(s) for s in self.symbols)


def is_lyndon(word):
    """
    Rotation test: word < word[i:] + word[:i] for every 0 < i < len(word).

    Args:
        word (sequence): Symbols, compared lexicographically

    Returns:
        bool: True for a non-empty Lyndon word
    """
    w = tuple(word)
    if not w:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def _check_args(n, d):
    for name, value in (("n", n), ("d", d)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise DomainError(f"{name} must be a positive integer, got {value!r}")


def iter_lyndon_words(n, d, cap=None, check=True):
    """
    Lyndon words of length exactly n over 1..d, in lexicographic order.

    Words are produced by Duval's successor rule (repeat the prefix up to
    length n, then drop trailing maximal letters and increment). With check
    set, every emitted word is re-tested with is_lyndon.

    Args:
        n (int): Word length, n >= 1
        d (int): Alphabet size, d >= 1
        cap (int, optional): Size cap, defaults to config.MAX_LYNDON_WORDS
        check (bool): Re-test each word with the rotation predicate

    Yields:
        LyndonWord: Each Lyndon word once

    Raises:
        CapacityError: if d^n / n exceeds the cap
        InconsistencyError: if a generated word fails the rotation test
    """
    _check_args(n, d)
    if cap is None:
        cap = config.MAX_LYNDON_WORDS
    if d ** n // n > cap:
        raise CapacityError(f"Lyndon words of length {n} over {d} symbols may exceed the cap of {cap}")

    w = [0]
    while w:
        w[-1] += 1
        if len(w) == n:
            word = tuple(w)
            if check and not is_lyndon(word):
                raise InconsistencyError(f"Generated word {word} is not a Lyndon word")
            yield LyndonWord(word)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == d:
            w.pop()


def lyndon_words(n, d, cap=None):
    """All Lyndon words of length n over d symbols, as a list."""
    return list(iter_lyndon_words(n, d, cap))


def lyndon_count(n, d, cap=None):
    """Number of Lyndon words of length n over d symbols."""
    count = sum(1 for _ in iter_lyndon_words(n, d, cap, check=False))
    logger.debug(f"lyndon_count({n}, {d}) = {count}")
    return count
