"""
Cube-root-sum identities from the Ramanujan family
==================================================

For the family member p_B the three real cube roots of its roots sum to
one nested cube root:

    cbrt(r1) + cbrt(r2) + cbrt(r3) = cbrt((B-9)/2 + 3 cbrt((27+B^2)/4)).

Scaling every left radicand by s > 0 multiplies both sides by cbrt(s),
which is how the classical printed forms arise.
"""

from fractions import Fraction

from rsckit import (
    FieldElement,
    PrecisionContext,
    build_identity,
    from_json,
    render,
    rsc_from_b,
)

ctx = PrecisionContext(bits=256)

# B = 0: the roots of p_0 are -1, 1/2, 2, recognized exactly
rec = build_identity(rsc_from_b(Fraction(0)), ctx)
print("B = 0 radicands:", [r.text() for r in rec.lhs])
print("  ", render(rec, "text"))
print("  residual is 2^%.1f" % rec.residual_log2)

# scale by 2/9 to reach the textbook form with ninths
scaled = rec.scaled(Fraction(2, 9), ctx)
print("\nscaled by 2/9:")
print("  ", render(scaled, "text"))

# B = -3 gives the cosine identity for the ninths of pi
rec3 = build_identity(rsc_from_b(Fraction(-3)), ctx)
print("\nB = -3, halved:")
print("  ", render(rec3, "text", scale=Fraction(1, 2), ctx=ctx))

# the radicands carry exact cosine forms whenever the arctan angle is a
# rational multiple of pi
for r in rec3.lhs:
    print("   radicand", ctx.nstr(r.value, 12), "=", r.cos.text())

# surd parameters work the same way; here B = 3 sqrt(3), whose roots
# are the 1/(1-x) orbit of sqrt(3) - 1
s3 = FieldElement.sqrt_int(3)
recs = build_identity(rsc_from_b(3 * s3), ctx)
print("\nB = 3*sqrt(3):")
print("  ", render(recs, "text"))

# latex and a versioned json schema are available for every record
print("\nlatex:", render(rec3, "latex", scale=Fraction(1, 2), ctx=ctx))
blob = render(rec, "json")
print("\njson round-trips losslessly:", from_json(blob) == rec)
