"""Prime sweeps for the congruence catalog.

Most checks hold everywhere. Three do not, and the residues below show how.
"""

from fractions import Fraction

from geompoly.bernoulli import pbernoulli_explicit
from geompoly.congruences import CHECKS, sweep
from geompoly.exactnum import primes_between, rational_residue

primes = primes_between(2, 31)
for check_id in sorted(CHECKS):
    t = sweep(check_id, primes).totals
    print(f"{check_id:9s} pass={t['pass']:5d} fail={t['fail']:3d} "
          f"inapplicable={t['inapplicable']:3d} erratum={t['erratum']}")

print("\nq   qB_{q,q} mod q   B_{q,q+1} mod q   1/12 mod q")
for q in primes_between(5, 31):
    a = rational_residue(q * pbernoulli_explicit(q, q), q).value
    b = rational_residue(pbernoulli_explicit(q, q + 1), q).value
    twelfth = rational_residue(Fraction(1, 12), q).value
    print(f"{q:<3d} {a:^16d} {b:^17d} {twelfth:^10d}")

print("\nB_{5,5} =", pbernoulli_explicit(5, 5))
