"""Stirling and r-Stirling triangles, exactly and modulo a prime.

Run with ``python3 demos/01_stirling_tables.py``.
"""

from geompoly.exactnum import CombTable, stirling1r, stirling2r

# Second-kind triangle for r = 0 (the classical numbers).
print("{n,k} for n <= 6")
for n in range(7):
    print(f"  n={n}:", [stirling2r(n, k, 0) for k in range(n + 1)])

# With r = 2 the first two elements must land in different blocks, so the
# triangle starts at row n = 2 and column k = 2.
print("\n{n,k}_2 for 2 <= n <= 6")
for n in range(2, 7):
    print(f"  n={n}:", [stirling2r(n, k, 2) for k in range(2, n + 1)])

# First kind: row n of [n,k]_r lists the coefficients of (x+r)(x+r+1)...(x+n-1).
print("\n[6,k]_1 =", [stirling1r(6, k, 1) for k in range(1, 7)])

# Tables can live in Z/qZ so big rows never touch big integers.
t = CombTable("stirling2r", 0, modulus=7)
print("\nrow 7 of {n,k} mod 7:", [t(7, k) for k in range(8)])
print("(every interior entry vanishes, as it must for a prime row)")
