"""Three independent constructions of the higher-order geometric polynomials.

``geom_poly`` weights Stirling numbers with rising factorials,
``geom_poly_explicit`` expands an r-Stirling sum in powers of (y+1), and
``gamma_moment`` maps the exponential polynomial through a Gamma integral.
They are built separately and compared coefficientwise.
"""

from fractions import Fraction

from geompoly import egf_reference, exp_poly, gamma_moment, geom_poly, geom_poly_explicit, geom_two_var

for n in range(5):
    print(f"w_{n}(y) =", geom_poly(n))

r = 3
for n in range(9):
    a, b, c = geom_poly(n, r), geom_poly_explicit(n, r), gamma_moment(exp_poly(n), r)
    assert a == b == c
print(f"\nall three routes agree for r = {r}, n <= 8")

# Ordered set partitions (Fubini numbers) are the values at y = 1.
print("w_n(1):", [str(geom_poly(n)(1)) for n in range(10)])

# The exponential generating function, expanded by truncated series arithmetic.
x, y = Fraction(1, 2), Fraction(-2)
series = egf_reference(2, x, y, 8).egf_values()
print("\nEGF coefficients for r=2, x=1/2, y=-2:", [str(v) for v in series])
print("two-variable polynomial values:      ", [str(geom_two_var(n, 2)(x, y)) for n in range(9)])
