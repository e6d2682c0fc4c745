"""Sweep the identity catalog and look at the pinned errata.

Entries ending in ``:stated`` keep a literal form that brute force shows to be
wrong; their mismatches are tallied under the ``erratum`` verdict so they stay
visible without counting as failures.
"""

from collections import Counter

from geompoly.identities import all_ids, run_suite, verify_identity

report = run_suite(all_ids())
print("totals:", report.totals)

per_id = Counter((c.id, c.verdict) for c in report.cases)
for identity in all_ids():
    row = {v: per_id[(identity, v)] for v in ("pass", "fail", "inapplicable", "erratum")}
    print(f"  {identity:14s} {row}")

# The p-Bernoulli integral holds from n = 2 on; n = 1 is off by one B_1-sized step.
for n in (1, 2, 3):
    c = verify_identity("ID-10", {"n": n, "p": 0})
    print(f"\nID-10 n={n}: lhs={c.lhs} rhs={c.rhs} -> {c.verdict}")

# The number identity produces order r + 1, not order r.
c = verify_identity("ID-29:stated", {"n": 3, "r": 2})
d = verify_identity("ID-29", {"n": 3, "r": 2})
print(f"\norder-r reading: {c.lhs} vs {c.rhs} ({c.verdict}); order r+1: {d.lhs} vs {d.rhs} ({d.verdict})")
