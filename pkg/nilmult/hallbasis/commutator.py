"""
Basic commutators as rooted binary bracket trees over letters x_1, x_2, ...
"""
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from typing import Optional

from nilmult.errors import DomainError


class Ordering(Enum):
    """Result of comparing two commutators."""
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Letter:
    """A letter x_i; i is its 1-based index."""
    index: int

    def __post_init__(self):
        if isinstance(self.index, bool) or not isinstance(self.index, int) or self.index < 1:
            raise DomainError(f"Letter index must be a positive integer, got {self.index!r}")

    def __str__(self):
        return f"x{self.index}"


@total_ordering
@dataclass(frozen=True, eq=False)
class BasicCommutator:
    """
    A leaf holding a Letter, or a bracket [left, right] of two commutators.

    Construct through leaf() and bracket(). Instances are immutable and
    totally ordered: first by weight, then leaves by letter index, leaves
    before brackets, brackets lexicographically by (left, right).
    """
    letter: Optional[Letter] = None
    left: Optional["BasicCommutator"] = None
    right: Optional["BasicCommutator"] = None
    weight: int = field(init=False)
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.letter is not None:
            if self.left is not None or self.right is not None:
                raise DomainError("A commutator is either a letter or a bracket, not both")
            object.__setattr__(self, "weight", 1)
            object.__setattr__(self, "_key", (1, 0, self.letter.index))
        else:
            if self.left is None or self.right is None:
                raise DomainError("A bracket needs both a left and a right operand")
            weight = self.left.weight + self.right.weight
            object.__setattr__(self, "weight", weight)
            object.__setattr__(self, "_key", (weight, 1, self.left._key, self.right._key))

    @classmethod
    def leaf(cls, index):
        """Commutator of weight one on letter x_index."""
        return cls(letter=Letter(index))

    @classmethod
    def bracket(cls, left, right):
        """The bracket [left, right]; basicness is not checked here."""
        return cls(left=left, right=right)

    @property
    def is_leaf(self):
        return self.letter is not None

    @property
    def sort_key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, BasicCommutator):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other):
        if not isinstance(other, BasicCommutator):
            return NotImplemented
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        return render_commutator(self)


def compare_commutators(a, b):
    """
    Compare two commutators under the module's total order.

    Args:
        a (BasicCommutator): First commutator
        b (BasicCommutator): Second commutator

    Returns:
        Ordering: LESS, EQUAL or GREATER
    """
    if a.sort_key < b.sort_key:
        return Ordering.LESS
    if a.sort_key > b.sort_key:
        return Ordering.GREATER
    return Ordering.EQUAL


def render_commutator(c):
    """Canonical bracket notation, e.g. "[[x2,x1],x1]"."""
    if c.is_leaf:
        return str(c.letter)
    return f"[{render_commutator(c.left)},{render_commutator(c.right)}]"


_TOKEN = re.compile(r"\s*(?:(\[)|(\])|(,)|x(\d+))")


def parse_commutator(text):
    """
    Parse bracket notation back into a commutator.

    Args:
        text (str): Text such as "[[x2,x1],x2]"; whitespace is ignored

    Returns:
        BasicCommutator: The parsed tree

    Raises:
        DomainError: on malformed text
    """
    tokens = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise DomainError(f"Unexpected input at position {pos} in {text!r}")
        if match.group(4) is not None:
            tokens.append(("letter", int(match.group(4))))
        else:
            tokens.append((match.group(0).strip(), None))
        pos = match.end()

    def parse_at(i):
        if i >= len(tokens):
            raise DomainError(f"Unexpected end of commutator text {text!r}")
        kind, value = tokens[i]
        if kind == "letter":
            return BasicCommutator.leaf(value), i + 1
        if kind != "[":
            raise DomainError(f"Expected a letter or '[' in {text!r}")
        left, i = parse_at(i + 1)
        if i >= len(tokens) or tokens[i][0] != ",":
            raise DomainError(f"Expected ',' in {text!r}")
        right, i = parse_at(i + 1)
        if i >= len(tokens) or tokens[i][0] != "]":
            raise DomainError(f"Expected ']' in {text!r}")
        return BasicCommutator.bracket(left, right), i + 1

    result, end = parse_at(0)
    if end != len(tokens):
        raise DomainError(f"Trailing input in {text!r}")
    return result


def commutator_violations(c, letters=None):
    """
    Walk a tree and list every breach of the basic-commutator rules.

    Weights are recounted from the leaves rather than read from the cache.

    Args:
        c (BasicCommutator): Tree to check
        letters (int, optional): Alphabet size; letters above it are reported

    Returns:
        list: Human-readable violation messages (empty when c is basic)
    """
    problems = []

    def walk(node):
        if node.is_leaf:
            if letters is not None and node.letter.index > letters:
                problems.append(f"{node} is outside the alphabet x1..x{letters}")
            return 1
        left_weight = walk(node.left)
        right_weight = walk(node.right)
        if node.weight != left_weight + right_weight:
            problems.append(f"{node} has weight {node.weight}, leaves give {left_weight + right_weight}")
        if compare_commutators(node.left, node.right) is not Ordering.GREATER:
            problems.append(f"{node}: left operand is not greater than right operand")
        if not node.left.is_leaf:
            if compare_commutators(node.right, node.left.right) is Ordering.LESS:
                problems.append(f"{node}: right operand is smaller than {node.left.right}")
        return left_weight + right_weight

    walk(c)
    return problems


def is_basic_commutator(c, letters=None):
    """True when c satisfies the weight, ordering and nesting rules."""
    return not commutator_violations(c, letters)


def validate_commutator(c, letters=None):
    """Raise DomainError listing the rule breaches of c, if any."""
    problems = commutator_violations(c, letters)
    if problems:
        raise DomainError("; ".join(problems))
    return c
