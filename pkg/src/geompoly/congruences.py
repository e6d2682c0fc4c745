"""Prime-modulus congruences for Stirling numbers, geometric polynomials and
(p-)Bernoulli numbers.

Polynomial values are computed twice: exactly over the integers and then
reduced, and natively from Stirling tables kept mod q. A disagreement between
the two paths is reported as a failure of the case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .bernoulli import bernoulli, pbernoulli_explicit
from .errors import DenominatorDivisibleByQ, NotPrime, ParameterOutOfDomain, UnknownCheck
from .exactnum import is_prime, rational_residue, stirling1, stirling2, table
from .geomfamily import geom_poly
from .report import DENOMINATOR_DIVISIBLE, ERRATUM, FAIL, INAPPLICABLE, PASS, Case, CheckReport

__all__ = [
    "CHECKS",
    "CongruenceCase",
    "check_congruence",
    "sweep",
    "geom_value_mod",
    "sample_residues",
]


class HypothesisViolated(Exception):
    """Raised internally when a theorem's hypothesis excludes the case."""


def geom_value_mod(n: int, r: int, y: int, q: int) -> int:
    """w_n^(r)(y) mod q from a mod-q Stirling table (no big integers)."""
    t = table("stirling2r", 0, q)
    acc, poch, ypow = 0, 1, 1
    for k in range(n + 1):
        if k:
            poch = poch * (r + k - 1) % q
            ypow = ypow * y % q
        acc = (acc + t(n, k) * poch * ypow) % q
    return acc


def _geom_residue(n: int, r: int, y: int, q: int) -> int:
    exact = geom_poly(n, r)(y)
    via_exact = rational_residue(exact, q).value
    via_table = geom_value_mod(n, r, y, q)
    if via_exact != via_table:
        raise AssertionError(
            f"mod-{q} paths disagree for w_{n}^({r})({y}): {via_exact} vs {via_table}"
        )
    return via_exact


def sample_residues(q: int, k: Optional[int] = None) -> list:
    """y in [1, q-1]; all of them, or k evenly spread ones including both ends."""
    ys = list(range(1, q))
    if k is None or k >= len(ys):
        return ys
    if k <= 1:
        return ys[:max(k, 0)]
    step = (len(ys) - 1) / (k - 1)
    return sorted({ys[round(i * step)] for i in range(k)})


@dataclass
class CongruenceCase(Case):
    """A Case whose lhs is the observed residue and rhs the expected residues."""

    @property
    def q(self) -> int:
        return self.params["q"]

    @property
    def observed(self):
        return self.lhs

    @property
    def expected(self):
        return self.rhs


@dataclass(frozen=True)
class CongruenceCheck:
    id: str
    anchor: str
    params: tuple  # auxiliary parameter names besides q
    evaluate: Callable  # (q, **params) -> (observed, expected set, note)
    min_prime: int = 2
    odd_only: bool = False
    # auxiliary parameter grid for a sweep: (q, options) -> iterable of dicts
    grid: Callable = None
    erratum: Callable = lambda q, P: False


def _residues(values: Iterable, q: int) -> frozenset:
    return frozenset(v % q for v in values)


# --- evaluators --------------------------------------------------------------


def _gross(q, n):
    if q not in (2, 5):
        raise ParameterOutOfDomain("C-GROSS is split mod 2 and mod 5 only")
    a = rational_residue(geom_poly(n + 4, 1)(1), q).value
    b = rational_residue(geom_poly(n, 1)(1), q).value
    return a, frozenset({b}), None


def _c32(q, k):
    return stirling1(q, k) % q, frozenset({0}), None


def _c33(q, k):
    return stirling2(q, k) % q, frozenset({0}), None


def _howard(q, m, k):
    expected = stirling2(m + 1, k) + (stirling2(m, k - q) if k >= q else 0)
    return stirling2(q + m, k) % q, _residues([expected], q), None


def _l1(q, y):
    return _geom_residue(q, 1, y, q), _residues([y], q), None


def _l2(q, n, y):
    return _geom_residue(q + n - 1, 1, y, q), frozenset({_geom_residue(n, 1, y, q)}), None


def _t3(q, y):
    if (1 + y) % q == 0:
        raise HypothesisViolated("q divides 1 + y")
    return _geom_residue(q, q, y, q), frozenset({0}), None


def _t4(q, n, r, y):
    if r % q:
        raise HypothesisViolated("r is not a multiple of q")
    if y % q == 0:
        raise HypothesisViolated("q divides y")
    return _geom_residue(n, r, y, q), frozenset({0}), None


def _t5(q, r, y):
    if r % q != 1:
        raise HypothesisViolated("r is not 1 mod q")
    if y % q == 0 or (1 + y) % q == 0:
        raise HypothesisViolated("q divides y or 1 + y")
    return _geom_residue(q - 1, r, y, q), frozenset({0}), None


def _t6(q, r, y):
    if y % q == 0:
        raise HypothesisViolated("q divides y")
    if r % q == 0:
        expected = 0
    elif r % q == q - 1:
        expected = -y
    else:
        raise HypothesisViolated("r is neither 0 nor -1 mod q")
    return _geom_residue(q + 1, r, y, q), _residues([expected], q), None


def _vsc(q, n):
    obs = rational_residue(q * bernoulli(2 * n), q).value
    expected = q - 1 if (2 * n) % (q - 1) == 0 else 0
    return obs, frozenset({expected}), None


def _vscp(q, n):
    obs = rational_residue(q * pbernoulli_explicit(2 * n, q), q).value
    if (2 * n) % (q - 1) == 0:
        return obs, frozenset({rational_residue(Fraction(-1, 2), q).value}), None
    sign = {1: "+1", q - 1: "-1"}.get(obs, f"neither (+-1); observed {obs}")
    return obs, frozenset({1, q - 1}), f"sign: {sign}"


def _qq(q):
    return rational_residue(q * pbernoulli_explicit(q, q), q).value, frozenset(
        {rational_residue(Fraction(1, 12), q).value}
    ), None


def _qq1(q):
    return rational_residue(pbernoulli_explicit(q, q + 1), q).value, frozenset(
        {rational_residue(Fraction(1, 12), q).value}
    ), None


# --- sweep grids -------------------------------------------------------------


def _ys(q, opts):
    return [{"y": y} for y in sample_residues(q, opts.get("y_sample"))]


def _grid_gross(q, opts):
    if q not in (2, 5):
        return []
    return [{"n": n} for n in range(0, opts.get("n_max", 40) + 1)]


def _grid_k(q, opts):
    return [{"k": k} for k in range(2, q)]


def _grid_howard(q, opts):
    return [
        {"m": m, "k": k}
        for m in range(0, opts.get("m_max", 10) + 1)
        for k in range(0, q + m + 1)
    ]


def _grid_l2(q, opts):
    return [
        {"n": n, **yd} for n in range(1, opts.get("n_max", 10) + 1) for yd in _ys(q, opts)
    ]


def _grid_t4(q, opts):
    return [
        {"n": n, "r": r, **yd}
        for n in range(1, opts.get("n_max", 6) + 1)
        for r in (q, 2 * q)
        for yd in _ys(q, opts)
    ]


def _grid_t5(q, opts):
    return [{"r": r, **yd} for r in (1 + q, 1 + 2 * q) for yd in _ys(q, opts)]


def _grid_t6(q, opts):
    return [{"r": r, **yd} for r in (q, 2 * q, q - 1, 2 * q - 1) for yd in _ys(q, opts)]


def _grid_vsc(q, opts):
    return [{"n": n} for n in range(1, opts.get("n_max", 30) + 1)]


def _grid_vscp(q, opts):
    return [{"n": n} for n in range(1, opts.get("n_max", 10) + 1)]


CHECKS: dict = {
    c.id: c
    for c in [
        CongruenceCheck("C-GROSS", "w_{n+4} = w_n (mod 10), split mod 2 and mod 5", ("n",), _gross,
                  grid=_grid_gross, erratum=lambda q, P: P["n"] == 0),
        CongruenceCheck("C-32", "[q,k] = 0 (mod q), 2 <= k <= q-1", ("k",), _c32, grid=_grid_k),
        CongruenceCheck("C-33", "{q,k} = 0 (mod q), 2 <= k <= q-1", ("k",), _c33, grid=_grid_k),
        CongruenceCheck("C-HOWARD", "{q+m,k} = {m+1,k} + {m,k-q} (mod q)", ("m", "k"), _howard,
                  grid=_grid_howard),
        CongruenceCheck("C-L1", "w_q(y) = y (mod q)", ("y",), _l1, odd_only=True, grid=_ys),
        CongruenceCheck("C-L2", "w_{q+n-1}(y) = w_n(y) (mod q)", ("n", "y"), _l2, grid=_grid_l2),
        CongruenceCheck("C-T3", "w_q^(q)(y) = 0 (mod q) when q does not divide 1+y", ("y",), _t3,
                  odd_only=True, grid=_ys),
        CongruenceCheck("C-T4", "w_n^(r)(y) = 0 (mod q) for r = 0 (mod q), n >= 1", ("n", "r", "y"),
                  _t4, grid=_grid_t4),
        CongruenceCheck("C-T5", "w_{q-1}^(r)(y) = 0 (mod q) for r = 1 (mod q)", ("r", "y"), _t5,
                  odd_only=True, grid=_grid_t5),
        CongruenceCheck("C-T6", "w_{q+1}^(r)(y) = 0 for r = 0, = -y for r = -1 (mod q)", ("r", "y"),
                  _t6, odd_only=True, grid=_grid_t6),
        CongruenceCheck("C-VSC", "q B_{2n} = 0 or -1 (mod q)", ("n",), _vsc, grid=_grid_vsc),
        CongruenceCheck("C-VSCP", "q B_{2n,q} = -+1 or -1/2 (mod q)", ("n",), _vscp, odd_only=True,
                  grid=_grid_vscp),
        CongruenceCheck("C-QQ", "q B_{q,q} = 1/12 (mod q)", (), _qq, min_prime=5,
                  grid=lambda q, o: [{}]),
        CongruenceCheck("C-QQ1", "B_{q,q+1} = 1/12 (mod q)", (), _qq1, min_prime=5,
                  grid=lambda q, o: [{}]),
    ]
}


def check_congruence(check_id: str, q: int, params: Optional[dict] = None) -> CongruenceCase:
    """Evaluate one congruence instance and classify it."""
    try:
        chk = CHECKS[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    params = dict(params or {})
    missing = [p for p in chk.params if p not in params]
    if missing:
        raise ParameterOutOfDomain(f"{check_id} needs {missing}")
    P = {"q": q, **{k: params[k] for k in chk.params}}
    aux = {k: params[k] for k in chk.params}

    if q < chk.min_prime or (chk.odd_only and q == 2):
        return CongruenceCase(check_id, P, None, None, INAPPLICABLE, f"requires prime >= {max(chk.min_prime, 3 if chk.odd_only else 2)}")
    try:
        observed, expected, note = chk.evaluate(q, **aux)
    except HypothesisViolated as exc:
        return CongruenceCase(check_id, P, None, None, INAPPLICABLE, str(exc))
    except DenominatorDivisibleByQ as exc:
        return CongruenceCase(check_id, P, None, None, DENOMINATOR_DIVISIBLE, str(exc))
    except AssertionError as exc:
        return CongruenceCase(check_id, P, None, None, FAIL, str(exc))
    if observed in expected:
        verdict = PASS
    elif chk.erratum(q, aux):
        verdict, note = ERRATUM, "literal statement fails here (pinned erratum)"
    else:
        verdict = FAIL
    return CongruenceCase(check_id, P, observed, expected, verdict, note)


def sweep(check_id: str, primes: Sequence[int], y_sample: Optional[int] = None, **limits) -> CheckReport:
    """Run one check over the given primes and its auxiliary grid.

    ``limits`` may set ``n_max`` / ``m_max`` to override the default ranges.
    """
    if check_id not in CHECKS:
        raise UnknownCheck(check_id)
    chk = CHECKS[check_id]
    opts = {"y_sample": y_sample, **{k: v for k, v in limits.items() if v is not None}}
    cases = []
    for q in primes:
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        for aux in chk.grid(q, opts):
            cases.append(check_congruence(check_id, q, aux))
    return CheckReport(check_id, cases)
