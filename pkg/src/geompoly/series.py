"""Certified evaluation of infinite series with exact rational arithmetic.

Every series handled here has terms whose ratio |t_{k+1}/t_k| is bounded by a
function rho(k) that is nonincreasing in k. Once rho(K) < 1, the tail after
index K is at most |t_K| * rho(K) / (1 - rho(K)) (geometric domination), so
the value lies within that radius of the partial sum through K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .errors import DivergentInput, InvalidOrder, TolNotReached
from .exactnum import as_rational, binomial, ipow
from .geomfamily import geom_poly, rbell_poly

__all__ = [
    "TERM_CAP",
    "CertifiedValue",
    "certified_sum",
    "sum_dobinski_geometric",
    "dobinski_closed_form",
    "sum_power_binomial",
    "power_binomial_closed_form",
    "exp_certified",
    "DobinskiCheck",
    "check_rbell_dobinski",
]

TERM_CAP = 10**6


@dataclass(frozen=True)
class CertifiedValue:
    """Exact partial sum with a rigorous bound on the omitted tail."""

    partial_sum: Fraction
    tail_radius: Fraction
    terms_used: int

    @property
    def lower(self) -> Fraction:
        return self.partial_sum - self.tail_radius

    @property
    def upper(self) -> Fraction:
        return self.partial_sum + self.tail_radius

    def contains(self, value) -> bool:
        value = as_rational(value)
        return self.lower <= value <= self.upper

    def within(self, other: "CertifiedValue") -> bool:
        """True when this interval is a subset of ``other``."""
        return other.lower <= self.lower and self.upper <= other.upper


def certified_sum(
    term: Callable[[int], Fraction],
    ratio_bound: Callable[[int], Fraction],
    tol: Fraction,
    start: int = 0,
    cap: int = TERM_CAP,
) -> CertifiedValue:
    """Sum term(k) for k >= 0 until the certified tail radius is <= tol.

    ``ratio_bound(k)`` must bound |term(k+1)/term(k)| for every k' >= k and be
    nonincreasing in k for k >= ``start``.
    """
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = Fraction(0)
    for k in range(cap):
        t = term(k)
        s += t
        if k < start or t == 0:
            continue
        rho = ratio_bound(k)
        if rho < 1:
            radius = abs(t) * rho / (1 - rho)
            if radius <= tol:
                return CertifiedValue(s, radius, k + 1)
    raise TolNotReached(f"tail bound above {tol} after {cap} terms")


def _check_order(r) -> None:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidOrder(f"order must be a positive integer, got {r!r}")


def _check_unit_disc(y: Fraction) -> None:
    if abs(y) >= 1:
        raise DivergentInput(f"|{y}| >= 1")
    if y == 0:
        raise DivergentInput("y = 0 is excluded (the series is its first term)")


def sum_dobinski_geometric(n: int, r: int, y, tol) -> CertifiedValue:
    """Certified sum over k of (k+r)^n C(k+r-1,k) y^k, for 0 < |y| < 1."""
    _check_order(r)
    y = as_rational(y)
    _check_unit_disc(y)
    ay = abs(y)

    def term(k):
        return Fraction((k + r) ** n * binomial(k + r - 1, k)) * y**k

    def ratio(k):
        # ((k+r+1)/(k+r))^n * (k+r)/(k+1) * |y|; both factors decrease in k
        return Fraction(k + r + 1, k + r) ** n * Fraction(k + r, k + 1) * ay

    return certified_sum(term, ratio, tol)


def dobinski_closed_form(n: int, r: int, y) -> Fraction:
    """(-1)^n (1-y)^(-r) w_n^(r)(1/(y-1))."""
    y = as_rational(y)
    return (-1) ** n * geom_poly(n, r)(1 / (y - 1)) / (1 - y) ** r


def sum_power_binomial(n: int, r: int, x, tol) -> CertifiedValue:
    """Certified sum over k of k^n C(k+r-1,k) x^k (0^0 = 1), for 0 < |x| < 1."""
    _check_order(r)
    x = as_rational(x)
    _check_unit_disc(x)
    ax = abs(x)

    def term(k):
        return Fraction(ipow(k, n) * binomial(k + r - 1, k)) * x**k

    def ratio(k):
        return Fraction(k + 1, k) ** n * Fraction(k + r, k + 1) * ax

    # the k = 0 term vanishes for n > 0, so bounding starts at k = 1
    return certified_sum(term, ratio, tol, start=1)


def power_binomial_closed_form(n: int, r: int, x) -> Fraction:
    """(1-x)^(-r) w_n^(r)(x/(1-x))."""
    x = as_rational(x)
    return geom_poly(n, r)(x / (1 - x)) / (1 - x) ** r


def exp_certified(y, tol) -> CertifiedValue:
    """Taylor partial sum of e^y with a rigorous remainder bound."""
    y = as_rational(y)
    if y == 0:
        return CertifiedValue(Fraction(1), Fraction(0), 1)
    ay = abs(y)
    return certified_sum(
        lambda k: y**k / factorial(k),
        lambda k: ay / (k + 1),
        tol,
    )


@dataclass(frozen=True)
class DobinskiCheck:
    passed: bool
    polynomial_value: Fraction
    lhs_lower: Fraction  # e^y * phi_{n,r}(y), enclosed
    lhs_upper: Fraction
    series: CertifiedValue

    @property
    def width(self) -> Fraction:
        return (self.lhs_upper - self.lhs_lower) + 2 * self.series.tail_radius


def check_rbell_dobinski(n: int, r: int, y, tol) -> DobinskiCheck:
    """Check e^y phi_{n,r}(y) against the certified sum of (k+r)^n y^k / k!."""
    if r < 0 or n < 0:
        raise ValueError("n and r must be >= 0")
    y = as_rational(y)
    tol = as_rational(tol)
    if y <= 0:
        raise DivergentInput("y must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    phi = rbell_poly(n, r)(y)
    e = exp_certified(y, tol / (4 * max(phi, Fraction(1))))
    lo, hi = sorted((phi * e.lower, phi * e.upper))

    def term(k):
        return Fraction(ipow(k + r, n), factorial(k)) * y**k

    def ratio(k):
        return Fraction(k + r + 1, k + r) ** n * y / (k + 1)

    # with r = 0 the k = 0 ratio is undefined; bound from k = 1
    s = certified_sum(term, ratio, tol / 4, start=0 if r else 1)
    passed = max(lo, s.lower) <= min(hi, s.upper)
    return DobinskiCheck(passed, phi, lo, hi, s)
