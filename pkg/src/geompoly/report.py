"""Verdicts, per-case records and the aggregate report shared by all suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .polyalg import BiPoly, UniPoly

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"
# A case inside the literal statement's range but outside the window (or
# reading) confirmed by brute force: reported, never counted as a failure.
ERRATUM = "erratum"
DENOMINATOR_DIVISIBLE = "denominator_divisible"

VERDICTS = (PASS, FAIL, INAPPLICABLE, ERRATUM, DENOMINATOR_DIVISIBLE)


def serialize(value: Any) -> Any:
    """JSON-ready form: rationals become exact "p/q" strings."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, UniPoly):
        return [str(c) for c in value.coeffs]
    if isinstance(value, BiPoly):
        return [[str(c) for c in row] for row in value.coeffs]
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [serialize(v) for v in items]
    if hasattr(value, "value") and hasattr(value, "modulus"):
        return str(value.value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _param_key(value):
    if isinstance(value, (int, Fraction)):
        return (0, Fraction(value), "")
    return (1, Fraction(0), str(value))


@dataclass
class Case:
    """Outcome of one identity or congruence instance."""

    id: str
    params: dict
    lhs: Any
    rhs: Any
    verdict: str
    note: Optional[str] = None

    def sort_key(self):
        return (self.id, tuple(_param_key(v) for v in self.params.values()))

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": {k: serialize(v) for k, v in self.params.items()},
            "lhs": serialize(self.lhs),
            "rhs": serialize(self.rhs),
            "verdict": self.verdict,
            "note": self.note,
        }


@dataclass
class CheckReport:
    suite: str
    cases: list = field(default_factory=list)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.sort_key())

    @property
    def totals(self) -> dict:
        counts = {v: 0 for v in VERDICTS}
        for c in self.cases:
            counts[c.verdict] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def failures(self) -> list:
        """Cases that make the run unsuccessful."""
        return [c for c in self.cases if c.verdict in (FAIL, DENOMINATOR_DIVISIBLE)]

    @property
    def ok(self) -> bool:
        return not self.failures

    def merged(self, other: "CheckReport", suite: Optional[str] = None) -> "CheckReport":
        return CheckReport(suite or self.suite, self.cases + other.cases)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [c.to_dict() for c in self.cases],
            "totals": self.totals,
        }
