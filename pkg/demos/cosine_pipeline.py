"""
From cosines of rational angles to finished identities
======================================================

2cos(2pi/n) has an integer minimal polynomial of degree phi(n)/2. When
that degree is 3, 6, or 12 the polynomial has a cubic factor over a real
quadratic field, and the factor shifts onto the Ramanujan family. The
pipeline chains those steps and also reports the cosine relations that
the order-three root cycle 1/(1-x) forces.
"""

from rsckit import PrecisionContext, cos_min_poly, cos_pipeline, mine

ctx = PrecisionContext(bits=256)

# the minimal polynomials are exact integers, validated by an exact
# product identity over all divisors of n
for n in (7, 9, 12, 21, 36):
    print(f"n = {n:2d}: {cos_min_poly(n, ctx)}")

# the full chain for n = 36: factor over Q(sqrt(3)), shift, identity
res = cos_pipeline(36, 1, ctx)
print("\nn = 36 factor:", res.factor.cubic, "over sqrt(%d)" % res.factor.d)
print("shift: a =", res.shift.a, " c =", res.shift.c, " B =", res.shift.B)
print("roots are 2cos(2 pi k/36) for k in", res.factor.root_indices)

from rsckit import render

print("identity:", render(res.identity, "text"))

# the cycle 1/(1-x) permutes the three shifted cosines; each orbit pair
# yields a linear relation among cosines with surd coefficients
print("root cycle sigma:", res.sigma)
for rel in res.relations:
    print("relation:", rel.text())

# a cyclic-quartic case: no two-surd coefficient field exists for n = 52,
# so the factor is numeric, but B is still recognized exactly
res52 = cos_pipeline(52, 1, ctx)
print("\nn = 52 grouping is numeric:", not res52.factor.exact)
print("recognized B =", res52.identity.B)
print("identity:", render(res52.identity, "text"))

# mine a range: one entry per distinct root orbit
print("\nmined n in 7..14:")
for entry in mine(range(7, 15), ctx):
    r = entry.result
    print(f"  n={entry.n} k={entry.target_k} "
          f"roots={r.factor.root_indices} B={r.identity.B}")
