from fractions import Fraction
from math import comb, factorial

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geompoly.errors import DivergentInput, InvalidOrder, TolNotReached
from geompoly.series import (
    certified_sum,
    check_rbell_dobinski,
    dobinski_closed_form,
    exp_certified,
    power_binomial_closed_form,
    sum_dobinski_geometric,
    sum_power_binomial,
)

TOL = Fraction(1, 10**30)
YS = [Fraction(1, 3), Fraction(1, 2), Fraction(-1, 2)]


def test_dobinski_example():
    v = sum_dobinski_geometric(2, 1, Fraction(1, 2), TOL)
    # sum (k+1)^2 / 2^k = 12
    assert dobinski_closed_form(2, 1, Fraction(1, 2)) == 12
    assert v.contains(12)
    assert v.tail_radius <= TOL


def test_power_binomial_closed_form_small_case():
    # sum k x^k = x/(1-x)^2
    x = Fraction(1, 3)
    assert power_binomial_closed_form(1, 1, x) == x / (1 - x) ** 2
    assert sum_power_binomial(1, 1, x, TOL).contains(x / (1 - x) ** 2)


@pytest.mark.parametrize("y", YS)
def test_closed_forms_inside_intervals(y):
    for n in range(0, 7):
        for r in range(1, 5):
            assert sum_dobinski_geometric(n, r, y, TOL).contains(dobinski_closed_form(n, r, y))
            assert sum_power_binomial(n, r, y, TOL).contains(power_binomial_closed_form(n, r, y))


def test_against_high_precision_brute_sum():
    mpmath.mp.dps = 60
    y = Fraction(1, 2)
    brute = mpmath.nsum(lambda k: (k + 3) ** 4 * mpmath.binomial(k + 2, k) * (mpmath.mpf(y.numerator) / y.denominator) ** k,
                        [0, mpmath.inf])
    v = sum_dobinski_geometric(4, 3, y, TOL)
    assert abs(brute - mpmath.mpf(v.partial_sum.numerator) / v.partial_sum.denominator) < mpmath.mpf(10) ** -28


def test_partial_sum_is_literal_prefix():
    y, n, r = Fraction(-1, 2), 3, 2
    v = sum_dobinski_geometric(n, r, y, Fraction(1, 10**8))
    prefix = sum(Fraction((k + r) ** n * comb(k + r - 1, k)) * y**k for k in range(v.terms_used))
    assert prefix == v.partial_sum


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 5), st.integers(1, 4), st.sampled_from(YS))
def test_nested_refinement(n, r, y):
    coarse = sum_dobinski_geometric(n, r, y, Fraction(1, 10**12))
    fine = sum_dobinski_geometric(n, r, y, Fraction(1, 10**14))
    assert fine.tail_radius <= coarse.tail_radius
    assert fine.within(coarse)


def test_exp_enclosure():
    mpmath.mp.dps = 50
    for y in (Fraction(1, 3), Fraction(-7, 5), Fraction(3)):
        e = exp_certified(y, TOL)
        val = mpmath.exp(mpmath.mpf(y.numerator) / y.denominator)
        lo = mpmath.mpf(e.lower.numerator) / e.lower.denominator
        hi = mpmath.mpf(e.upper.numerator) / e.upper.denominator
        assert lo - mpmath.mpf(10) ** -45 <= val <= hi + mpmath.mpf(10) ** -45
        assert e.tail_radius <= TOL


@pytest.mark.parametrize("y", [Fraction(1), Fraction(1, 2), Fraction(3, 2)])
def test_rbell_dobinski(y):
    for n in range(0, 7):
        for r in range(0, 5):
            check = check_rbell_dobinski(n, r, y, Fraction(1, 10**20))
            assert check.passed
            assert check.width <= Fraction(1, 10**20)


def test_rbell_example():
    check = check_rbell_dobinski(1, 2, 1, Fraction(1, 10**20))
    assert check.passed and check.polynomial_value == 3


def test_domain_errors():
    with pytest.raises(DivergentInput):
        sum_dobinski_geometric(2, 1, 2, TOL)
    with pytest.raises(DivergentInput):
        sum_power_binomial(2, 1, -1, TOL)
    with pytest.raises(DivergentInput):
        sum_dobinski_geometric(2, 1, 0, TOL)
    with pytest.raises(DivergentInput):
        check_rbell_dobinski(2, 1, -1, TOL)
    with pytest.raises(InvalidOrder):
        sum_dobinski_geometric(2, 0, Fraction(1, 2), TOL)


def test_term_cap():
    with pytest.raises(TolNotReached):
        certified_sum(lambda k: Fraction(1, factorial(k)), lambda k: Fraction(1, k + 1),
                      Fraction(1, 10**50), cap=10)
