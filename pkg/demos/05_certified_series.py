"""Certified infinite sums with exact rational partial sums.

Each call returns the partial sum together with a rigorous bound on the
omitted tail, so a closed form can be tested for membership exactly.
"""

from fractions import Fraction

from geompoly.series import (
    check_rbell_dobinski,
    dobinski_closed_form,
    exp_certified,
    sum_dobinski_geometric,
)

tol = Fraction(1, 10**30)
y = Fraction(1, 2)
v = sum_dobinski_geometric(3, 2, y, tol)
closed = dobinski_closed_form(3, 2, y)
print(f"sum_k (k+2)^3 (k+1) / 2^k: {v.terms_used} terms, tail <= {float(v.tail_radius):.3e}")
print("closed form", closed, "inside interval:", v.contains(closed))

e = exp_certified(1, tol)
print(f"\ne ~ {float(e.partial_sum):.15f} from {e.terms_used} terms")

chk = check_rbell_dobinski(4, 2, Fraction(3, 2), Fraction(1, 10**20))
print("\nr-Bell Dobinski at n=4, r=2, y=3/2:", "pass" if chk.passed else "fail")
print("  polynomial value", chk.polynomial_value)

# Tighter tolerance, nested interval.
fine = sum_dobinski_geometric(3, 2, y, tol / 10**10)
print("\nrefined interval nested in the coarse one:", fine.within(v))
