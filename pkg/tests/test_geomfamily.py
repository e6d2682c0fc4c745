from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geompoly.errors import InvalidOrder
from geompoly.geomfamily import (
    exp_poly,
    geom_number,
    geom_poly,
    geom_poly_explicit,
    geom_two_var,
    rbell_poly,
)
from geompoly.polyalg import UniPoly, egf_reference, gamma_moment

from oracles import fubini, geom_value_direct, stirling2_sum


def test_examples():
    assert geom_poly(5, 1)(2) == 9002
    assert geom_poly(3, 3)(1) == 99
    assert geom_poly(0, 5)(Fraction(7, 3)) == 1
    assert geom_poly(3, 1) == UniPoly([0, 1, 6, 6])


def test_fubini_numbers():
    assert [geom_number(n) for n in range(16)] == [fubini(n) for n in range(16)]


def test_exp_poly_coefficients():
    for n in range(12):
        assert exp_poly(n).coeffs == tuple(
            Fraction(stirling2_sum(n, k)) for k in range(exp_poly(n).degree + 1)
        )


@pytest.mark.parametrize("r", range(1, 6))
def test_three_constructions_agree(r):
    for n in range(13):
        a = geom_poly(n, r)
        assert a == geom_poly_explicit(n, r)
        assert a == gamma_moment(exp_poly(n), r)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 9), st.integers(1, 5), st.fractions(-4, 4, max_denominator=9))
def test_value_matches_direct_definition(n, r, y):
    assert geom_poly(n, r)(y) == geom_value_direct(n, r, y)


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("y", [Fraction(1), Fraction(-2), Fraction(1, 2)])
def test_egf_coefficients(r, y):
    N = 16
    vals = egf_reference(r, 0, y, N).egf_values()
    assert vals == [geom_poly(n, r)(y) for n in range(N + 1)]
    vals = egf_reference(r, r, y, N).egf_values()
    assert vals == [geom_two_var(n, r)(r, y) for n in range(N + 1)]


def test_two_variable_against_egf():
    for r in (1, 2, 3):
        for x in (Fraction(-1), Fraction(1, 2), Fraction(3)):
            for y in (Fraction(1), Fraction(-1, 3)):
                vals = egf_reference(r, x, y, 10).egf_values()
                assert vals == [geom_two_var(n, r)(x, y) for n in range(11)]


def test_two_variable_at_x_zero():
    for n in range(8):
        assert geom_two_var(n, 2).at_x(0) == geom_poly(n, 2)


def test_rbell_r0_is_exp_poly():
    for n in range(10):
        assert rbell_poly(n, 0) == exp_poly(n)


def test_rbell_value():
    # B_{1,2}(y) = {3,2}_2 + {3,3}_2 y = 2 + y
    assert rbell_poly(1, 2) == UniPoly([2, 1])


def test_integrality():
    for n in range(10):
        for r in range(1, 5):
            assert geom_poly(n, r).is_integral()


@pytest.mark.parametrize("bad", [0, -1, 1.5, True])
def test_invalid_order(bad):
    with pytest.raises(InvalidOrder):
        geom_poly(3, bad)
