"""
Classifying cubics and moving their roots through a linear shift
================================================================

Every squarefree monic cubic is either a translation of x^3 or carries
a linear substitution onto the one-parameter family

    p_B(x) = x^3 - ((3+B)/2) x^2 - ((3-B)/2) x + 1,

whose roots come from a single arctangent. This script walks both cases.
"""

from fractions import Fraction

from rsckit import (
    Cubic,
    PrecisionContext,
    classify_and_shift,
    cubic_trig_roots,
    rsc_trig_roots,
    solve_numeric,
    verify_shift,
)

ctx = PrecisionContext(bits=256)

# x^3 + 3x^2 + 3x + 2 satisfies Q = P^2/3, so it is (x+1)^3 + 1
f = Cubic(Fraction(3), Fraction(3), Fraction(2))
t = classify_and_shift(f, ctx)
print("x^3 + 3x^2 + 3x + 2 is a translation:")
print("  h =", t.h, " k =", t.k, " (f(x) = (x - h)^3 + k)")
print("  verified:", verify_shift(f, t, ctx))

# x^3 - 3x - 1 is not a translation; it lands on p_3
g = Cubic(Fraction(0), Fraction(-3), Fraction(-1))
s = classify_and_shift(g, ctx)
print("\nx^3 - 3x - 1 shifts onto the family:")
print("  a =", s.a, " c =", s.c, " B =", s.B)
print("  p_B:", s.rsc)
print("  verified:", verify_shift(g, s, ctx))

# the family's roots by the trigonometric formula, k even since B > 0
print("\nroots of p_3, k pi/3 + arctan(3 sqrt(3)/3)/3 angles:")
for root in rsc_trig_roots(s.B, ctx):
    print(f"  s_{root.k} = {ctx.nstr(root.value, 20)}")

# u = a - c t carries them back; compare with the trig roots of g itself
print("\nroots of x^3 - 3x - 1 through the shift:")
for value in cubic_trig_roots(g, ctx):
    print(" ", ctx.nstr(value, 20))

# an independent check: closed-form solver plus Newton polish
print("\nthe same roots from the numeric solver:")
for z in solve_numeric(g, ctx):
    print(" ", ctx.nstr(z.real, 20))

# exact coefficients work too; the shift stays exact when sqrt(disc) is
# expressible with at most two square roots
h = Cubic(Fraction(1), Fraction(-3), Fraction(-1))
sh = classify_and_shift(h, ctx)
print("\nx^3 + x^2 - 3x - 1 has a surd shift:")
print("  a =", sh.a)
print("  c =", sh.c)
print("  B =", sh.B)
