"""Acceptance criteria 1-7, each at its stated tolerance and time limit.

Every test starts from cold caches so the timings are not flattered by earlier
test modules. Each criterion prints one ACCEPTANCE line (also repeated in the
terminal summary).
"""

import json
import time
from fractions import Fraction

import pytest

import geompoly
from geompoly.bernoulli import pbernoulli_explicit, pbernoulli_via_stirling1
from geompoly.cli import main
from geompoly.congruences import sweep
from geompoly.exactnum import primes_between, stirling1r, stirling2
from geompoly.geomfamily import exp_poly, geom_poly, geom_poly_explicit
from geompoly.identities import all_ids, run_suite, verify_identity
from geompoly.polyalg import egf_reference, gamma_moment
from geompoly.report import ERRATUM, FAIL, PASS
from geompoly.series import (
    check_rbell_dobinski,
    dobinski_closed_form,
    power_binomial_closed_form,
    sum_dobinski_geometric,
    sum_power_binomial,
)

from oracles import rising_product_coeffs, stirling2_sum


@pytest.fixture(autouse=True)
def cold():
    geompoly.clear_caches()


def test_criterion_1_table_oracles(acceptance):
    t0 = time.perf_counter()
    s2_ok = all(stirling2(n, k) == stirling2_sum(n, k) for n in range(61) for k in range(n + 1))
    s2_time = time.perf_counter() - t0
    s1_ok = all(
        [stirling1r(n, k, r) for k in range(r, n + 1)] == rising_product_coeffs(n, r)
        for r in range(0, 6)
        for n in range(r, 31)
    )
    ok = s2_ok and s1_ok and s2_time < 5
    acceptance("1 table oracles", ok, f"second kind n<=60 {s2_ok} in {s2_time:.2f}s; first kind r<=5 {s1_ok}")
    assert ok


def test_criterion_2_constructor_triangulation(acceptance):
    t0 = time.perf_counter()
    tri = all(
        geom_poly(n, r) == geom_poly_explicit(n, r) == gamma_moment(exp_poly(n), r)
        for n in range(13)
        for r in range(1, 6)
    )
    egf = all(
        egf_reference(r, 0, y, 16).egf_values() == [geom_poly(n, r)(y) for n in range(17)]
        for r in range(1, 5)
        for y in (Fraction(1), Fraction(-2), Fraction(1, 2))
    )
    elapsed = time.perf_counter() - t0
    ok = tri and egf and elapsed < 10
    acceptance("2 constructor triangulation", ok, f"three routes {tri}; EGF N=16 {egf}; {elapsed:.2f}s")
    assert ok


def test_criterion_3_identity_suite(acceptance):
    t0 = time.perf_counter()
    report = run_suite(all_ids())
    elapsed = time.perf_counter() - t0
    totals = report.totals
    id10 = all(
        verify_identity("ID-10", {"n": n, "p": p}).verdict == PASS
        for n in range(2, 9)
        for p in range(6)
    )
    id29 = all(
        verify_identity("ID-29", {"n": n, "r": r}).verdict == PASS
        for n in range(9)
        for r in range(1, 5)
    )
    ok = totals[FAIL] == 0 and id10 and id29 and elapsed < 60
    detail = (f"{totals['total']} cases, {totals[PASS]} pass, {totals[FAIL]} fail, "
              f"{totals['inapplicable']} inapplicable, {totals[ERRATUM]} erratum; "
              f"ID-10 n>=2 {id10}; ID-29 order r+1 {id29}; {elapsed:.1f}s")
    acceptance("3 identity suite", ok, detail)
    assert ok


def test_criterion_4_bernoulli_routes(acceptance):
    t0 = time.perf_counter()
    routes = all(
        pbernoulli_explicit(n, p) == pbernoulli_via_stirling1(n, p)
        for n in range(21)
        for p in range(9)
    )
    vsc = sweep("C-VSC", primes_between(2, 61), n_max=30)
    elapsed = time.perf_counter() - t0
    ok = routes and vsc.ok
    acceptance("4 Bernoulli routes", ok,
               f"two routes n<=20 p<=8 {routes}; von Staudt-Clausen {vsc.totals[PASS]}/"
               f"{vsc.totals['total']} pass; {elapsed:.2f}s")
    assert ok


# check id -> (primes, sweep limits)
SWEEPS = {
    "C-L1": (primes_between(2, 61), {}),
    "C-L2": (primes_between(2, 61), {"n_max": 10}),
    "C-32": (primes_between(2, 97), {}),
    "C-33": (primes_between(2, 97), {}),
    "C-T3": (primes_between(2, 31), {}),
    "C-T4": (primes_between(2, 31), {}),
    "C-T5": (primes_between(2, 31), {}),
    "C-T6": (primes_between(2, 31), {}),
    "C-QQ": (primes_between(5, 31), {}),
    "C-QQ1": (primes_between(5, 31), {}),
    "C-VSCP": (primes_between(2, 31), {"n_max": 10}),
    "C-GROSS": ([2, 5], {"n_max": 40}),
}

_sweep_seconds: dict = {}


@pytest.mark.parametrize("check_id", list(SWEEPS))
def test_criterion_5_congruence_sweep(check_id, acceptance):
    primes, limits = SWEEPS[check_id]
    t0 = time.perf_counter()
    report = sweep(check_id, primes, **limits)
    _sweep_seconds[check_id] = time.perf_counter() - t0
    t = report.totals
    detail = (f"{t[PASS]} pass, {t[FAIL]} fail, {t['inapplicable']} inapplicable, "
              f"{t[ERRATUM]} erratum, {t['denominator_divisible']} denominator-divisible")
    if report.failures:
        first = report.failures[0]
        detail += f"; first failure {first.params}: observed {first.lhs}, expected {sorted(first.rhs)}"
    ok = report.ok
    acceptance(f"5 congruence {check_id}", ok, detail)
    assert ok, detail


def test_criterion_5_time_budget(acceptance):
    total = sum(_sweep_seconds.values())
    ok = len(_sweep_seconds) == len(SWEEPS) and total < 120
    acceptance("5 congruence time budget", ok, f"{total:.1f}s for {len(_sweep_seconds)} sweeps")
    assert ok


def test_criterion_6_certified_series(acceptance):
    tol = Fraction(1, 10**30)
    t0 = time.perf_counter()
    contained = all(
        sum_dobinski_geometric(n, r, y, tol).contains(dobinski_closed_form(n, r, y))
        and sum_power_binomial(n, r, y, tol).contains(power_binomial_closed_form(n, r, y))
        for n in range(7)
        for r in range(1, 5)
        for y in (Fraction(1, 3), Fraction(1, 2), Fraction(-1, 2))
    )
    # the r-Bell check is defined for y > 0 only
    dobinski = all(
        check_rbell_dobinski(n, r, y, Fraction(1, 10**20)).passed
        for n in range(7)
        for r in range(0, 5)
        for y in (Fraction(1, 3), Fraction(1, 2))
    )
    elapsed = time.perf_counter() - t0
    ok = contained and dobinski and elapsed < 30
    acceptance("6 certified series", ok,
               f"closed forms inside 1e-30 intervals {contained}; r-Bell Dobinski 1e-20 "
               f"{dobinski}; {elapsed:.2f}s")
    assert ok


def test_criterion_7_determinism(acceptance, tmp_path, capsys):
    docs = []
    out = tmp_path / "run.json"  # same path, so the recorded command matches too
    for _ in range(2):
        assert main(["verify", "--all", "--default-grid", "--out", str(out)]) == 0
        raw = out.read_bytes()
        json.loads(raw)
        docs.append(b"".join(line for line in raw.splitlines(True) if b'"timestamp"' not in line))
        geompoly.clear_caches()
    ok = docs[0] == docs[1]
    acceptance("7 determinism", ok, f"{len(docs[0])} bytes per listing")
    assert ok
