from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geompoly.errors import DenominatorDivisibleByQ, NotPrime
from geompoly.exactnum import (
    CombTable,
    ResidueModQ,
    binomial,
    is_prime,
    pochhammer,
    primes_between,
    rational_residue,
    stirling1,
    stirling1r,
    stirling2,
    stirling2r,
)

from oracles import rising_product_coeffs, stirling1r_enum, stirling2_sum, stirling2r_enum


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (4, 9, 0), (3, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal():
    for n in range(1, 30):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


@pytest.mark.parametrize(
    "x,n,expected", [(2, 2, 6), (3, 0, 1), (Fraction(1, 2), 3, Fraction(15, 8))]
)
def test_pochhammer(x, n, expected):
    assert pochhammer(x, n) == expected


def test_stirling2r_examples():
    assert stirling2r(4, 2, 0) == 7
    assert stirling2r(3, 2, 2) == 2
    for r in range(6):
        assert stirling2r(r, r, r) == 1


def test_stirling1r_examples():
    assert stirling1r(3, 1, 0) == 2
    assert stirling1r(3, 2, 2) == 2
    assert stirling1r(5, 4, 0) == 10


def test_out_of_range_is_zero():
    assert stirling2r(3, 5, 0) == 0
    assert stirling2r(5, 1, 2) == 0
    assert stirling1r(2, 3, 1) == 0
    assert stirling1r(1, 1, 2) == 0


def test_stirling2_matches_alternating_sum():
    for n in range(0, 61):
        for k in range(0, n + 1):
            assert stirling2(n, k) == stirling2_sum(n, k)


@pytest.mark.parametrize("r", range(0, 4))
def test_r_stirling_match_enumeration(r):
    for n in range(r, 7):
        for k in range(r, n + 1):
            assert stirling2r(n, k, r) == stirling2r_enum(n, k, r)
            assert stirling1r(n, k, r) == stirling1r_enum(n, k, r)


def test_stirling1r_rising_product():
    for r in range(0, 6):
        for n in range(r, 31):
            expected = rising_product_coeffs(n, r)
            got = [stirling1r(n, k, r) for k in range(r, n + 1)]
            assert got == expected


def test_classical_special_values():
    for n in range(1, 15):
        assert stirling1(n, 1) == __import__("math").factorial(n - 1)
        assert stirling1(n, n - 1) == binomial(n, 2)
        assert stirling2(n, 1) == 1
        assert stirling2(n, n) == 1


def test_mod_table_agrees_with_exact():
    t = CombTable("stirling2r", 0, modulus=13)
    for n in range(40):
        for k in range(n + 1):
            assert t(n, k) == stirling2(n, k) % 13


@pytest.mark.parametrize("q", [p for p in range(2, 98) if is_prime(p)])
def test_prime_row_congruences(q):
    for k in range(2, q):
        assert stirling1(q, k) % q == 0
        assert stirling2(q, k) % q == 0


def test_is_prime():
    small = [n for n in range(200) if is_prime(n)]
    brute = [n for n in range(2, 200) if all(n % d for d in range(2, n))]
    assert small == brute
    assert is_prime(1_000_000_007)
    assert not is_prime(1_000_000_007 * 998_244_353)
    assert is_prime(2**89 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert primes_between(3, 12) == [3, 5, 7, 11]


def test_rational_residue_examples():
    assert rational_residue(Fraction(1, 12), 5).value == 3
    assert rational_residue(7, 7).value == 0
    with pytest.raises(DenominatorDivisibleByQ):
        rational_residue(Fraction(1, 5), 5)


def test_residue_requires_prime():
    with pytest.raises(NotPrime):
        ResidueModQ(1, 9)


q_free = st.fractions(max_denominator=500).filter(lambda f: f.denominator % 7)


@settings(max_examples=200, deadline=None)
@given(q_free, q_free)
def test_residue_is_ring_homomorphism(a, b):
    q = 7
    assert rational_residue(a + b, q) == rational_residue(a, q) + rational_residue(b, q)
    assert rational_residue(a * b, q) == rational_residue(a, q) * rational_residue(b, q)
    assert rational_residue(-a, q) == -rational_residue(a, q)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]), st.integers(0, 10))
def test_howard_congruence(q, m):
    for k in range(0, q + m + 1):
        rhs = stirling2(m + 1, k) + (stirling2(m, k - q) if k >= q else 0)
        assert (stirling2(q + m, k) - rhs) % q == 0
