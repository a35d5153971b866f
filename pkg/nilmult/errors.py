"""
Exception hierarchy shared by every nilmult module.
"""


class NilmultError(Exception):
    """Base class for all toolkit errors."""


class ArithmeticOverflowError(NilmultError):
    """An exact value would exceed the configured integer width."""


class CapacityError(NilmultError):
    """An enumeration would exceed its configured element cap."""


class InconsistencyError(NilmultError):
    """An internal consistency check failed."""


class DomainError(NilmultError, ValueError):
    """Arguments lie outside the operation's domain."""


class GroupSpecError(DomainError):
    """Group or partition text could not be parsed."""
