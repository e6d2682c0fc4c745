"""Bernoulli and p-Bernoulli numbers.

B_1 = -1/2 throughout. p-Bernoulli numbers are computed from the r-Stirling
explicit sum; the first-kind Stirling relation to ordinary Bernoulli numbers
is kept as an independent second route.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import stirling1, stirling2r
from .geomfamily import geom_poly

__all__ = [
    "BernoulliCache",
    "bernoulli",
    "PBernoulliValue",
    "pbernoulli_explicit",
    "pbernoulli_via_stirling1",
    "pbernoulli",
    "tangent_check",
]


class BernoulliCache:
    """Grow-only list of B_0..B_N from sum_{k<n} B_k / (k!(n-k)!) = 0."""

    def __init__(self):
        self.values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be >= 0")
        if n >= len(self.values):
            self._extend_to(n)
        return self.values[n]

    def _extend_to(self, n: int) -> None:
        with self._lock:
            vals = self.values
            while len(vals) <= n:
                m = len(vals)
                if m >= 3 and m % 2:
                    vals.append(Fraction(0))
                    continue
                # the n = m + 1 relation solved for B_m
                s = sum(
                    (vals[k] / (factorial(k) * factorial(m + 1 - k)) for k in range(m)),
                    Fraction(0),
                )
                vals.append(-s * factorial(m))


_cache = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2)."""
    return _cache[n]


@dataclass(frozen=True)
class PBernoulliValue:
    n: int
    p: int
    value: Fraction


@lru_cache(maxsize=None)
def pbernoulli_explicit(n: int, p: int) -> Fraction:
    """B_{n,p} = ((p+1)/p!) sum_k {n+p,k+p}_p (-1)^k (k+p)! / (k+p+1)."""
    if n < 0 or p < 0:
        raise ValueError("n and p must be >= 0")
    s = Fraction(0)
    for k in range(n + 1):
        s += Fraction((-1) ** k * stirling2r(n + p, k + p, p) * factorial(k + p), k + p + 1)
    return s * Fraction(p + 1, factorial(p))


@lru_cache(maxsize=None)
def pbernoulli_via_stirling1(n: int, p: int) -> Fraction:
    """B_{n,p} solved from sum_k [p,k] (-1)^k B_{n+k} = (p!/(p+1)) B_{n,p}."""
    if n < 0 or p < 0:
        raise ValueError("n and p must be >= 0")
    s = sum(
        (stirling1(p, k) * (-1) ** k * bernoulli(n + k) for k in range(p + 1)),
        Fraction(0),
    )
    return s * Fraction(p + 1, factorial(p))


def pbernoulli(n: int, p: int) -> PBernoulliValue:
    return PBernoulliValue(n, p, pbernoulli_explicit(n, p))


def tangent_check(n: int) -> Fraction:
    """Return w_n(-1/2) after asserting it equals (2/(n+1))(1 - 2^(n+1)) B_{n+1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    value = geom_poly(n, 1)(Fraction(-1, 2))
    closed = Fraction(2, n + 1) * (1 - 2 ** (n + 1)) * bernoulli(n + 1)
    if value != closed:
        raise AssertionError(f"w_{n}(-1/2) = {value} but Bernoulli form gives {closed}")
    return value
