"""Geometric, higher-order geometric, exponential and r-Bell polynomials.

Every family is returned as an exact :class:`~geompoly.polyalg.UniPoly`
(or :class:`~geompoly.polyalg.BiPoly` for the two-variable family). Results
are memoised; the returned objects are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InvalidOrder
from .exactnum import binomial, pochhammer, stirling2, stirling2r
from .polyalg import BiPoly, UniPoly

__all__ = [
    "exp_poly",
    "rbell_poly",
    "geom_poly",
    "geom_poly_explicit",
    "geom_two_var",
    "geom_number",
]


def _check_order(r) -> None:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidOrder(f"order must be a positive integer, got {r!r}")


def _check_n(n) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


@lru_cache(maxsize=None, typed=True)
def exp_poly(n: int) -> UniPoly:
    """Exponential (single-variable Bell) polynomial sum_k {n,k} y^k."""
    _check_n(n)
    return UniPoly(stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None, typed=True)
def rbell_poly(n: int, r: int) -> UniPoly:
    """r-Bell polynomial sum_k {n+r, k+r}_r y^k."""
    _check_n(n)
    if r < 0:
        raise ValueError("r must be >= 0")
    return UniPoly(stirling2r(n + r, k + r, r) for k in range(n + 1))


@lru_cache(maxsize=None, typed=True)
def geom_poly(n: int, r: int = 1) -> UniPoly:
    """Higher-order geometric polynomial sum_k {n,k} (r)_k y^k.

    ``r = 1`` gives the geometric (Fubini) polynomial with coefficients k!{n,k}.
    """
    _check_n(n)
    _check_order(r)
    return UniPoly(stirling2(n, k) * pochhammer(r, k) for k in range(n + 1))


@lru_cache(maxsize=None, typed=True)
def geom_poly_explicit(n: int, r: int = 1) -> UniPoly:
    """Same polynomial as :func:`geom_poly`, built from r-Stirling numbers.

    Uses sum_k {n+r,k+r}_r (r)_k (-1)^(n+k) (y+1)^k with each (y+1)^k
    expanded binomially into the monomial basis.
    """
    _check_n(n)
    _check_order(r)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        w = stirling2r(n + r, k + r, r) * pochhammer(r, k) * (-1) ** (n + k)
        if not w:
            continue
        for j in range(k + 1):
            coeffs[j] += w * binomial(k, j)
    return UniPoly(coeffs)


@lru_cache(maxsize=None, typed=True)
def geom_two_var(n: int, r: int = 1) -> BiPoly:
    """Two-variable polynomial sum_k C(n,k) w_k^(r)(y) x^(n-k)."""
    _check_n(n)
    _check_order(r)
    # coefficient of x^i is C(n, n-i) w_{n-i}^(r)(y)
    return BiPoly.from_y_polys(
        [geom_poly(n - i, r) * binomial(n, n - i) for i in range(n + 1)]
    )


def geom_number(n: int, r: int = 1) -> Fraction:
    """Higher-order geometric number w_n^(r) = w_n^(r)(1)."""
    return geom_poly(n, r)(1)
