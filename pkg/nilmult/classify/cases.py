"""
Records produced by the verification scans.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple

import pandas as pd

from nilmult.abelian.partitions import PGroupPartition


class Status(Enum):
    """Outcome of a single check."""
    CONFIRMED = "confirmed"
    COUNTEREXAMPLE = "counterexample"


def _status(ok):
    return Status.CONFIRMED if ok else Status.COUNTEREXAMPLE


def _plist(parts):
    return [list(p.parts) for p in parts]


def _ptext(parts):
    return " ".join(str(p) for p in parts) or "-"


def _sortable(value):
    if isinstance(value, (list, tuple)):
        return tuple(_sortable(v) for v in value)
    return value


@dataclass(frozen=True)
class ClassificationCase:
    """
    One (n, c, t) instance of the hook-partition classification.

    solutions lists every partition of n whose multiplier exponent equals
    target_exponent; the claim holds when that list is exactly [expected].
    """
    n: int
    c: int
    t: int
    target_exponent: int
    expected: PGroupPartition
    solutions: Tuple[PGroupPartition, ...]

    @property
    def forward_holds(self):
        return self.expected in self.solutions

    @property
    def status(self):
        return _status(self.solutions == (self.expected,))

    def sort_key(self):
        return (self.n, self.c, self.t)

    def to_dict(self):
        return {
            "kind": "classification",
            "n": self.n,
            "c": self.c,
            "t": self.t,
            "target_exponent": self.target_exponent,
            "expected": list(self.expected.parts),
            "solutions": _plist(self.solutions),
            "forward_holds": self.forward_holds,
            "status": self.status.value,
        }

    def row(self):
        return {
            "n": self.n, "c": self.c, "t": self.t,
            "target": self.target_exponent,
            "expected": str(self.expected),
            "solutions": _ptext(self.solutions),
            "status": self.status.value,
        }


@dataclass(frozen=True)
class InequalityFinding:
    """
    Evaluation of one inequality at concrete parameters.

    relation is "<" or "<="; holds records whether lhs relation rhs is true.
    """
    name: str
    parameters: Dict[str, Any]
    lhs: int
    rhs: int
    relation: str = "<="
    holds: bool = field(init=False)

    def __post_init__(self):
        if self.relation == "<":
            holds = self.lhs < self.rhs
        elif self.relation == "<=":
            holds = self.lhs <= self.rhs
        else:
            raise ValueError(f"Unknown relation {self.relation!r}")
        object.__setattr__(self, "holds", holds)

    @property
    def status(self):
        return _status(self.holds)

    def sort_key(self):
        order = {"lemma": 0, "III": 1, "I": 2, "II": 3}
        return (order.get(self.name, 9), self.name,
                tuple(_sortable(v) for v in self.parameters.values()))

    def to_dict(self):
        return {
            "kind": "inequality",
            "name": self.name,
            "parameters": dict(self.parameters),
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "holds": self.holds,
            "status": self.status.value,
        }

    def row(self):
        params = ", ".join(f"{k}={_sortable(v)}" for k, v in self.parameters.items())
        return {
            "inequality": self.name,
            "parameters": params,
            "check": f"{self.lhs} {self.relation} {self.rhs}",
            "status": self.status.value,
        }


@dataclass(frozen=True)
class BoundCase:
    """
    Scan of every partition of n at class c against the bound witt(c+1, n).
    """
    n: int
    c: int
    bound: int
    max_found: int
    maximizers: Tuple[PGroupPartition, ...]
    violations: Tuple[PGroupPartition, ...]

    @property
    def unique_elementary_maximizer(self):
        return self.maximizers == (PGroupPartition((1,) * self.n),)

    @property
    def status(self):
        return _status(not self.violations and self.max_found == self.bound
                       and self.unique_elementary_maximizer)

    def sort_key(self):
        return (self.n, self.c)

    def to_dict(self):
        return {
            "kind": "bound",
            "n": self.n,
            "c": self.c,
            "bound": self.bound,
            "max_found": self.max_found,
            "maximizers": _plist(self.maximizers),
            "violations": _plist(self.violations),
            "unique_elementary_maximizer": self.unique_elementary_maximizer,
            "status": self.status.value,
        }

    def row(self):
        return {
            "n": self.n, "c": self.c,
            "bound": self.bound, "max": self.max_found,
            "maximizers": _ptext(self.maximizers),
            "violations": _ptext(self.violations),
            "status": self.status.value,
        }


@dataclass(frozen=True)
class OracleComparison:
    """A value computed two independent ways."""
    name: str
    parameters: Dict[str, Any]
    expected: Any
    found: Any
    holds: bool

    @property
    def status(self):
        return _status(self.holds)

    def sort_key(self):
        return (self.name, tuple(_sortable(v) for v in self.parameters.values()))

    def to_dict(self):
        return {
            "kind": "oracle",
            "name": self.name,
            "parameters": dict(self.parameters),
            "expected": self.expected,
            "found": self.found,
            "holds": self.holds,
            "status": self.status.value,
        }

    def row(self):
        params = ", ".join(f"{k}={_sortable(v)}" for k, v in self.parameters.items())
        return {
            "check": self.name,
            "parameters": params,
            "expected": str(self.expected),
            "found": str(self.found),
            "status": self.status.value,
        }


@dataclass
class VerificationReport:
    """Cases of one suite run, in canonical order, with summary counts."""
    suite: str
    parameters: Dict[str, Any]
    cases: List[Any] = field(default_factory=list)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda case: case.sort_key())

    @property
    def summary(self):
        confirmed = sum(1 for case in self.cases if case.status is Status.CONFIRMED)
        return {
            "total": len(self.cases),
            "confirmed": confirmed,
            "counterexamples": len(self.cases) - confirmed,
        }

    @property
    def clean(self):
        return self.summary["counterexamples"] == 0

    def counterexamples(self):
        return [case for case in self.cases if case.status is Status.COUNTEREXAMPLE]

    def to_dict(self):
        return {
            "suite": self.suite,
            "parameters": dict(self.parameters),
            "cases": [case.to_dict() for case in self.cases],
            "summary": self.summary,
        }

    def to_frame(self, only_counterexamples=False):
        """
        One row per case.

        Args:
            only_counterexamples (bool): Keep only failing cases

        Returns:
            pd.DataFrame: Flat, printable view of the cases
        """
        cases = self.counterexamples() if only_counterexamples else self.cases
        return pd.DataFrame([case.row() for case in cases])
