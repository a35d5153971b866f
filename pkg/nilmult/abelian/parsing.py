"""
Text syntax for groups: "4,2,2" (concrete), "p^3,p,p" (symbolic) and bare
partitions "3,1,1".
"""
import re

from nilmult.abelian.groups import CyclicDecomposition
from nilmult.abelian.partitions import PGroupPartition
from nilmult.errors import DomainError, GroupSpecError

_SYMBOLIC = re.compile(r"p(?:\^([0-9]+))?")
_DIGITS = re.compile(r"[0-9]+")


def _fields(text):
    if text is None or not text.strip():
        raise GroupSpecError("Empty group specification")
    return [field.strip() for field in text.split(",")]


def _partition_from(parts, text):
    try:
        return PGroupPartition(tuple(parts), prime="p")
    except DomainError as e:
        raise GroupSpecError(f"Invalid partition {text!r}: {e}") from e


def parse_partition(text):
    """
    Parse a weakly decreasing list of positive integers, e.g. "3,1,1".

    Raises:
        GroupSpecError: if a field is not a positive integer or the list increases
    """
    parts = []
    for field in _fields(text):
        if not _DIGITS.fullmatch(field):
            raise GroupSpecError(f"Partition parts must be positive integers, got {field!r} in {text!r}")
        parts.append(int(field))
    return _partition_from(parts, text)


def parse_group_spec(text):
    """
    Parse a group specification.

    Args:
        text (str): "4,2,2" for Z_4 + Z_2 + Z_2, or "p^3,p,p" for a symbolic p-group

    Returns:
        CyclicDecomposition or PGroupPartition: concrete or symbolic group

    Raises:
        GroupSpecError: on malformed input
    """
    fields = _fields(text)
    if any(field.startswith("p") for field in fields):
        parts = []
        for field in fields:
            match = _SYMBOLIC.fullmatch(field)
            if not match:
                raise GroupSpecError(f"Expected p or p^e, got {field!r} in {text!r}")
            exponent = int(match.group(1)) if match.group(1) else 1
            if exponent < 1:
                raise GroupSpecError(f"Exponents must be positive in {text!r}")
            parts.append(exponent)
        return _partition_from(parts, text)

    orders = []
    for field in fields:
        if not _DIGITS.fullmatch(field):
            raise GroupSpecError(f"Cyclic orders must be integers, got {field!r} in {text!r}")
        orders.append(int(field))
    try:
        return CyclicDecomposition(tuple(orders))
    except DomainError as e:
        raise GroupSpecError(f"Invalid group {text!r}: {e}") from e
