"""Catalog of exact identities for the geometric polynomial families.

Each entry computes its two sides along separate routes: the left side from
the family constructors, the right side from the identity's own sum. The two
routes share nothing beyond the Stirling/Bernoulli base tables.

Three statements in the source literature carry typos that brute force
resolves unambiguously. For those the catalog holds both the corrected form
(under the plain id) and the literal form (id suffixed ``:stated``); literal
mismatches are reported with verdict ``erratum`` rather than ``fail``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping, Optional, Sequence

from .bernoulli import bernoulli, pbernoulli_explicit, pbernoulli_via_stirling1
from .errors import ParameterOutOfDomain, UnknownIdentity
from .exactnum import as_rational, binomial, ipow, pochhammer, stirling1, stirling1r, stirling2, stirling2r
from .geomfamily import exp_poly, geom_poly, geom_poly_explicit, geom_two_var, rbell_poly
from .polyalg import UniPoly, egf_reference, gamma_moment, integrate_unit
from .report import ERRATUM, FAIL, INAPPLICABLE, PASS, Case, CheckReport

__all__ = [
    "CATALOG",
    "CATALOG_VERSION",
    "DEFAULT_GRID",
    "Y_GRID",
    "X_GRID",
    "IdentityEntry",
    "verify_identity",
    "run_suite",
    "all_ids",
]

CATALOG_VERSION = "1"

Y_GRID = tuple(
    Fraction(v) for v in ("-3", "-2", "-3/2", "-1/2", "1/2", "1", "2", "5/2")
)
X_GRID = tuple(Fraction(v) for v in ("-1", "0", "1/2", "2"))

DEFAULT_GRID: dict = {
    "n": tuple(range(0, 9)),
    "m": tuple(range(0, 9)),
    "r": tuple(range(1, 5)),
    "r1": tuple(range(1, 5)),
    "r2": tuple(range(1, 5)),
    "p": tuple(range(0, 6)),
    "y": Y_GRID,
    "x": X_GRID,
}

Y = UniPoly.monomial(1)  # the polynomial variable y


def w(n: int, r: int = 1) -> UniPoly:
    return geom_poly(n, r)


def reflect(p: UniPoly) -> UniPoly:
    """p(-y-1)."""
    return p.compose_linear(-1, -1)


@lru_cache(maxsize=None)
def _egf_values(r: int, x: Fraction, y: Fraction, N: int) -> tuple:
    return tuple(egf_reference(r, x, y, N).egf_values())


# --- entries ---------------------------------------------------------------
# Each side function receives the parameter dict and returns (lhs, rhs).


def _id14(P):
    n, r, x, y = P["n"], P["r"], P["x"], P["y"]
    lhs = _egf_values(r, x, y, max(DEFAULT_GRID["n"][-1], n))[n]
    rhs = sum(
        (binomial(n, k) * w(k, r)(y) * ipow(x, n - k) for k in range(n + 1)), Fraction(0)
    )
    return lhs, rhs


def _id2(P):
    n, r = P["n"], P["r"]
    return geom_two_var(n, r).at_x(r), reflect(w(n, r)) * (-1) ** n


def _id15(P):
    n, r = P["n"], P["r"]
    lhs = sum((w(k, r) * (binomial(n, k) * r ** (n - k)) for k in range(n + 1)), UniPoly())
    return lhs, reflect(w(n, r)) * (-1) ** n


def _id16(P):
    n, r, y = P["n"], P["r"], P["y"]
    lhs = sum((binomial(n, k) * w(k, r + 1)(y) for k in range(n + 1)), Fraction(0))
    return lhs, w(n + 1, r)(y) / (r * y)


def _id11(P):
    n, r1, r2, y = P["n"], P["r1"], P["r2"], P["y"]
    lhs = sum(
        (binomial(n, k) * w(k, r1)(y) * w(n - k, r2)(y) for k in range(n + 1)), Fraction(0)
    )
    s = r1 + r2 - 1
    return lhs, (w(n + 1, s)(y) + s * w(n, s)(y)) / (s * (1 + y))


def _id3(P):
    n, r = P["n"], P["r"]
    return w(n, r), geom_poly_explicit(n, r)


def _id4(P):
    n, r = P["n"], P["r"]
    return reflect(w(n, r)) * (-1) ** n, gamma_moment(rbell_poly(n, r), r)


def _id8(P):
    n, r = P["n"], P["r"]
    return w(n, r), gamma_moment(exp_poly(n), r)


def _id23(P):
    n, m, r = P["n"], P["m"], P["r"]
    rhs = UniPoly()
    for k in range(n + 1):
        for j in range(m + 1):
            c = binomial(n, k) * stirling2(m, j) * pochhammer(r, j) * ipow(j, n - k)
            if c:
                rhs = rhs + (Y**j) * w(k, r + j) * c
    return w(n + m, r), rhs


def _id5(P):
    n, m, r = P["n"], P["m"], P["r"]
    rhs = UniPoly()
    for k in range(m + 1):
        c = stirling2r(m + r, k + r, r) * pochhammer(r, k) * (-1) ** (m + k)
        if c:
            rhs = rhs + ((Y + 1) ** k) * w(n, r + k) * c
    return w(n + m, r), rhs


def _id7_sum(P):
    n, r, p, y = P["n"], P["r"], P["p"], P["y"]
    s = sum(
        (stirling1r(p + r, k + r, r) * w(n + k, r)(y) for k in range(p + 1)), Fraction(0)
    )
    return w(n, r + p)(y), s / (1 + y) ** p


def _id7(P):
    lhs, s = _id7_sum(P)
    return lhs, s / pochhammer(P["r"], P["p"])


def _id7_stated(P):
    lhs, s = _id7_sum(P)
    return lhs, s / pochhammer(P["p"], P["r"])


def _idcor(P):
    n, m, r = P["n"], P["m"], P["r"]
    rhs = UniPoly()
    for k in range(n + 1):
        for j in range(m + 1):
            c = (
                stirling2r(m + r, j + r, r)
                * binomial(n, k)
                * ipow(j + r, n - k)
                * (-1) ** (n + m + j)
                * pochhammer(r, j)
            )
            if c:
                rhs = rhs + ((Y + 1) ** j) * reflect(w(k, r + j)) * c
    return w(n + m, r), rhs


def _id9(P):
    n, p = P["n"], P["p"]
    lhs = ((Y + 1) ** p) * w(n, p + 1)
    rhs = sum(
        (w(n + k, 1) * stirling1(p + 1, k + 1) for k in range(p + 1)), UniPoly()
    ) / factorial(p)
    return lhs, rhs


def _id29_sum(P):
    n, r = P["n"], P["r"]
    s = sum((stirling1(r + 1, k + 1) * w(n + k, 1)(1) for k in range(r + 1)), Fraction(0))
    return s / (factorial(r) * 2**r)


def _id29(P):
    return w(P["n"], P["r"] + 1)(1), _id29_sum(P)


def _id29_stated(P):
    return w(P["n"], P["r"])(1), _id29_sum(P)


def _one_minus_y_pow(p: int) -> UniPoly:
    return UniPoly.linear(-1, 1) ** p


def _id10(P):
    n, p = P["n"], P["p"]
    lhs = integrate_unit(_one_minus_y_pow(p) * w(n, p + 1).compose_linear(-1, 0))
    rhs = (-1) ** (n - 1) * Fraction(p + 1, p + 2) * pbernoulli_via_stirling1(n - 1, p + 1)
    return lhs, rhs


def _id12_17(P):
    n, p = P["n"], P["p"]
    return pbernoulli_explicit(n, p), pbernoulli_via_stirling1(n, p)


def _id18(P):
    n, m, p = P["n"], P["m"], P["p"]
    s = Fraction(0)
    for k in range(m + 1):
        s += (
            stirling2r(m + p, k + p, p)
            * Fraction((-1) ** k * pochhammer(p + 1, k), k + p + 1)
            * pbernoulli_via_stirling1(n, p + k)
        )
    return pbernoulli_explicit(n + m, p), (p + 1) * s


def _id19_sum(P):
    n, r, p = P["n"], P["r"], P["p"]
    return sum(
        (
            stirling1r(p + r, k + r, r) * (-1) ** k * pbernoulli_via_stirling1(n + k, r)
            for k in range(p + 1)
        ),
        Fraction(0),
    )


def _id19(P):
    r, p = P["r"], P["p"]
    pref = Fraction(r * (p + r + 1), r + 1) / pochhammer(r, p + 1)
    return pbernoulli_explicit(P["n"], p + r), pref * _id19_sum(P)


def _id19_stated(P):
    r, p = P["r"], P["p"]
    pref = Fraction(r * (p + r + 1), r + 1) / pochhammer(p, r + 1)
    return pbernoulli_explicit(P["n"], p + r), pref * _id19_sum(P)


def _id24(P):
    n = P["n"]
    return integrate_unit(w(n, 1).compose_linear(-1, 0)), bernoulli(n)


def _id37(P):
    n, p = P["n"], P["p"]
    lhs = integrate_unit(_one_minus_y_pow(p) * w(n, 1).compose_linear(-1, 0))
    return lhs, pbernoulli_via_stirling1(n, p) / (p + 1)


def _idtan(P):
    n = P["n"]
    return w(n, 1)(Fraction(-1, 2)), Fraction(2, n + 1) * (1 - 2 ** (n + 1)) * bernoulli(n + 1)


# --- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    anchor: str
    params: tuple
    sides: Callable
    # returns a reason string when the case is singular / outside the domain
    singular: Callable = lambda P: None
    # True when a mismatch at these params is a known, pinned erratum
    erratum: Callable = lambda P: False
    level: str = "polynomial"
    statement: str = ""


def _nonzero_y(P):
    return "y = 0" if P["y"] == 0 else None


def _y_not_minus_one(P):
    return "y = -1" if P["y"] == -1 else None


def _id10_singular(P):
    return "n = 0 (B_{-1,p+1} undefined)" if P["n"] < 1 else None


def _id19_singular(P):
    return "n = 0 outside stated range n >= 1" if P["n"] < 1 else None


def _id19_stated_singular(P):
    if P["n"] < 1:
        return "n = 0 outside stated range n >= 1"
    if P["p"] == 0:
        return "p = 0 makes (p)_{r+1} = 0"
    return None


def _id7_stated_singular(P):
    if P["y"] == -1:
        return "y = -1"
    if P["p"] == 0:
        return "p = 0 makes (p)_r = 0"
    return None


def _always(P):
    return True


_ENTRIES = [
    IdentityEntry("ID-14", "two-variable expansion", ("n", "r", "x", "y"), _id14,
                  level="pointwise",
                  statement="n![t^n](1-y(e^t-1))^-r e^(xt) = sum_k C(n,k) w_k^(r)(y) x^(n-k)"),
    IdentityEntry("ID-2", "two-variable reflection", ("n", "r"), _id2,
                  statement="w_n^(r)(r;y) = (-1)^n w_n^(r)(-y-1)"),
    IdentityEntry("ID-15", "binomial recurrence with powers of r", ("n", "r"), _id15,
                  statement="sum_k C(n,k) w_k^(r)(y) r^(n-k) = (-1)^n w_n^(r)(-y-1)"),
    IdentityEntry("ID-16", "order-raising recurrence", ("n", "r", "y"), _id16,
                  singular=_nonzero_y, level="pointwise",
                  statement="sum_k C(n,k) w_k^(r+1)(y) = w_{n+1}^(r)(y) / (r y)"),
    IdentityEntry("ID-11", "convolution", ("n", "r1", "r2", "y"), _id11,
                  singular=_y_not_minus_one, level="pointwise",
                  statement="sum_k C(n,k) w_k^(r1) w_{n-k}^(r2) = (w_{n+1}^(s) + s w_n^(s)) / (s(1+y)), s = r1+r2-1"),
    IdentityEntry("ID-3", "r-Stirling explicit formula", ("n", "r"), _id3,
                  statement="w_n^(r)(y) = sum_k {n+r,k+r}_r (r)_k (-1)^(n+k) (y+1)^k"),
    IdentityEntry("ID-4", "r-Bell gamma integral", ("n", "r"), _id4,
                  statement="(-1)^n w_n^(r)(-y-1) = Gamma-moment of phi_{n,r}"),
    IdentityEntry("ID-8", "Bell gamma integral", ("n", "r"), _id8,
                  statement="w_n^(r)(y) = Gamma-moment of phi_n"),
    IdentityEntry("ID-23", "recurrence over y^j w_k^(r+j)", ("n", "m", "r"), _id23,
                  statement="w_{n+m}^(r) = sum_k sum_j C(n,k){m,j}(r)_j j^(n-k) y^j w_k^(r+j)"),
    IdentityEntry("ID-5", "shifted-index representation", ("n", "m", "r"), _id5,
                  statement="w_{n+m}^(r) = sum_k {m+r,k+r}_r (r)_k (-1)^(m+k) (y+1)^k w_n^(r+k)"),
    IdentityEntry("ID-7", "order-raising via first-kind r-Stirling (corrected prefactor (r)_p)",
                  ("n", "r", "p", "y"), _id7, singular=_y_not_minus_one, level="pointwise",
                  statement="w_n^(r+p)(y) = 1/((r)_p (1+y)^p) sum_k [p+r,k+r]_r w_{n+k}^(r)(y)"),
    IdentityEntry("ID-7:stated", "order-raising, literal prefactor (p)_r",
                  ("n", "r", "p", "y"), _id7_stated, singular=_id7_stated_singular,
                  erratum=_always, level="pointwise",
                  statement="w_n^(r+p)(y) = 1/((p)_r (1+y)^p) sum_k [p+r,k+r]_r w_{n+k}^(r)(y)"),
    IdentityEntry("ID-COR", "double sum with reflected terms", ("n", "m", "r"), _idcor,
                  statement="w_{n+m}^(r) = sum_k sum_j {m+r,j+r}_r C(n,k)(j+r)^(n-k)(-1)^(n+m+j)(r)_j(y+1)^j w_k^(r+j)(-y-1)"),
    IdentityEntry("ID-9", "polynomial extension of the number formula", ("n", "p"), _id9,
                  statement="(1+y)^p w_n^(p+1)(y) = (1/p!) sum_k [p+1,k+1] w_{n+k}(y)"),
    IdentityEntry("ID-29", "higher-order geometric numbers (order r+1 reading)", ("n", "r"), _id29,
                  level="number",
                  statement="w_n^(r+1) = 1/(r! 2^r) sum_k [r+1,k+1] w_{n+k}"),
    IdentityEntry("ID-29:stated", "higher-order geometric numbers (order r reading)", ("n", "r"),
                  _id29_stated, erratum=_always, level="number",
                  statement="w_n^(r) = 1/(r! 2^r) sum_k [r+1,k+1] w_{n+k}"),
    IdentityEntry("ID-10", "p-Bernoulli integral", ("n", "p"), _id10,
                  singular=_id10_singular, erratum=lambda P: P["n"] == 1, level="number",
                  statement="int_0^1 (1-y)^p w_n^(p+1)(-y) dy = (-1)^(n-1) (p+1)/(p+2) B_{n-1,p+1}; confirmed for n >= 2"),
    IdentityEntry("ID-12/17", "p-Bernoulli explicit vs first-kind Stirling route", ("n", "p"),
                  _id12_17, level="number",
                  statement="((p+1)/p!) sum_k {n+p,k+p}_p (-1)^k (k+p)!/(k+p+1) = ((p+1)/p!) sum_k [p,k](-1)^k B_{n+k}"),
    IdentityEntry("ID-18", "p-Bernoulli index shift", ("n", "m", "p"), _id18, level="number",
                  statement="B_{n+m,p} = (p+1) sum_k {m+p,k+p}_p (-1)^k (p+1)_k/(k+p+1) B_{n,p+k}"),
    IdentityEntry("ID-19", "p-Bernoulli order shift (corrected prefactor (r)_{p+1})", ("n", "r", "p"),
                  _id19, singular=_id19_singular, level="number",
                  statement="B_{n,p+r} = r(p+r+1)/((r+1)(r)_{p+1}) sum_k [p+r,k+r]_r (-1)^k B_{n+k,r}"),
    IdentityEntry("ID-19:stated", "p-Bernoulli order shift, literal prefactor (p)_{r+1}",
                  ("n", "r", "p"), _id19_stated, singular=_id19_stated_singular,
                  erratum=_always, level="number",
                  statement="B_{n,p+r} = r(p+r+1)/((r+1)(p)_{r+1}) sum_k [p+r,k+r]_r (-1)^k B_{n+k,r}"),
    IdentityEntry("ID-24", "Bernoulli integral", ("n",), _id24, level="number",
                  statement="int_0^1 w_n(-y) dy = B_n"),
    IdentityEntry("ID-37", "p-Bernoulli weighted integral", ("n", "p"), _id37, level="number",
                  statement="int_0^1 (1-y)^p w_n(-y) dy = B_{n,p}/(p+1)"),
    IdentityEntry("ID-TAN", "value at y = -1/2", ("n",), _idtan, level="number",
                  statement="w_n(-1/2) = (2/(n+1))(1-2^(n+1)) B_{n+1}"),
]

CATALOG: dict = {e.id: e for e in _ENTRIES}


def all_ids() -> list:
    return sorted(CATALOG)


_NONNEG_INT = ("n", "m", "p")
_POS_INT = ("r", "r1", "r2")


def _normalise(entry: IdentityEntry, params: Mapping) -> dict:
    out = {}
    for name in entry.params:
        if name not in params:
            raise ParameterOutOfDomain(f"{entry.id} needs parameter {name!r}")
        v = params[name]
        if name in _NONNEG_INT or name in _POS_INT:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParameterOutOfDomain(f"{name} must be an integer, got {v!r}")
            lo = 1 if name in _POS_INT else 0
            if v < lo:
                raise ParameterOutOfDomain(f"{name} must be >= {lo}, got {v}")
        else:
            try:
                v = as_rational(v)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise ParameterOutOfDomain(f"{name} must be rational, got {v!r}") from exc
        out[name] = v
    return out


def verify_identity(identity_id: str, params: Mapping) -> Case:
    """Evaluate both sides of one catalog entry and compare them exactly."""
    try:
        entry = CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None
    P = _normalise(entry, params)
    reason = entry.singular(P)
    if reason is not None:
        return Case(entry.id, P, None, None, INAPPLICABLE, reason)
    lhs, rhs = entry.sides(P)
    if lhs == rhs:
        verdict, note = PASS, None
    elif entry.erratum(P):
        verdict, note = ERRATUM, "literal statement fails here (pinned erratum)"
    else:
        verdict, note = FAIL, None
    return Case(entry.id, P, lhs, rhs, verdict, note)


def grid_cases(identity_id: str, grid: Optional[Mapping] = None):
    """Parameter dicts for one entry over the Cartesian grid."""
    entry = CATALOG[identity_id]
    g = dict(DEFAULT_GRID)
    if grid:
        g.update({k: tuple(v) for k, v in grid.items()})
    axes = [g[name] for name in entry.params]
    for values in itertools.product(*axes):
        yield dict(zip(entry.params, values))


def run_suite(ids: Sequence[str], grid: Optional[Mapping] = None, suite: str = "identities") -> CheckReport:
    """Sweep every listed identity over the grid; unknown ids raise UnknownIdentity."""
    for i in ids:
        if i not in CATALOG:
            raise UnknownIdentity(i)
    cases = [verify_identity(i, P) for i in ids for P in grid_cases(i, grid)]
    return CheckReport(suite, cases)
