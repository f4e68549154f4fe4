"""Trig root formulas, the numeric solver, and root permutations."""

from fractions import Fraction

import pytest

from rsckit import (
    Cubic,
    FieldElement,
    INFINITY,
    NonRealShift,
    NotAPermutation,
    TranslationCase,
    cubic_trig_roots,
    format_cycles,
    permutation_under,
    rsc_cycle,
    rsc_from_b,
    rsc_trig_roots,
    solve_numeric,
)

S3 = FieldElement.sqrt_int(3)


def test_b_zero_roots_are_rational(ctx):
    roots = rsc_trig_roots(Fraction(0), ctx)
    assert [r.k for r in roots] == [2, 4, 6]
    got = sorted(r.value for r in roots)
    for val, want in zip(got, (-1, Fraction(1, 2), 2)):
        assert abs(val - Fraction(want)) < ctx.tolerance
    # limiting angle phi/3 = pi/6
    assert abs(roots[0].angle - (2 * ctx.pi / 3 + ctx.pi / 6)) < ctx.tolerance


def test_b_three_sqrt3(ctx):
    exact = sorted(((1 - S3) / 2, S3 - 1, 2 + S3))
    roots = rsc_trig_roots(3 * S3, ctx)
    assert [r.k for r in roots] == [2, 4, 6]
    for val, want in zip(sorted(r.value for r in roots), exact):
        assert abs(val - want.embed(ctx)) < ctx.tolerance


def test_k_parity_and_residuals(ctx):
    for b in (Fraction(5), Fraction(-5), Fraction(1, 3), Fraction(-70)):
        roots = rsc_trig_roots(b, ctx)
        assert [r.k for r in roots] == ([2, 4, 6] if b > 0 else [1, 3, 5])
        pb = rsc_from_b(b).embed(ctx)
        for r in roots:
            assert abs(pb.evaluate(r.value, ctx)) < ctx.tolerance
            assert abs(r.angle - (r.k * ctx.pi / 3 + roots[0].angle
                                  - roots[0].k * ctx.pi / 3)) < ctx.tolerance


def test_complex_b_rejected(ctx):
    with pytest.raises(NonRealShift):
        rsc_trig_roots(ctx.complex(1, 1), ctx)
    # zero imaginary part is fine
    roots = rsc_trig_roots(ctx.complex(5, 0), ctx)
    assert [r.k for r in roots] == [2, 4, 6]


def test_cubic_trig_roots_match_solver(ctx):
    f = Cubic(Fraction(0), Fraction(-3), Fraction(-1))
    got = sorted(cubic_trig_roots(f, ctx))
    want = solve_numeric(f, ctx)
    for g, w in zip(got, want):
        assert abs(g - w) < ctx.tolerance
    # roots of x^3 - 3x - 1 are 2cos(pi/9), 2cos(7pi/9), 2cos(13pi/9)
    coss = sorted(2 * ctx.cospi_frac(Fraction(num, 9)) for num in (1, 7, 13))
    for g, w in zip(got, coss):
        assert abs(g - w) < ctx.tolerance


def test_translation_case_raised(ctx):
    with pytest.raises(TranslationCase):
        cubic_trig_roots(Cubic(Fraction(0), Fraction(0), Fraction(1)), ctx)
    with pytest.raises(TranslationCase):
        cubic_trig_roots(Cubic(Fraction(3), Fraction(3), Fraction(2)), ctx)


def test_negative_discriminant_rejected(ctx):
    with pytest.raises(NonRealShift):
        cubic_trig_roots(Cubic(Fraction(0), Fraction(-1), Fraction(-1)), ctx)


def test_solve_numeric_real_roots(ctx):
    roots = solve_numeric(Cubic(Fraction(0), Fraction(-3), Fraction(-1)), ctx)
    assert len(roots) == 3
    assert all(r.imag == 0 for r in roots)
    assert roots == sorted(roots, key=lambda z: (z.real, z.imag))
    f = Cubic(Fraction(0), Fraction(-3), Fraction(-1)).embed(ctx)
    for r in roots:
        assert abs(f.evaluate(r, ctx)) < ctx.tolerance


def test_solve_numeric_complex_pair(ctx):
    roots = solve_numeric(Cubic(Fraction(0), Fraction(0), Fraction(-2)), ctx)
    real = [r for r in roots if r.imag == 0]
    comp = [r for r in roots if r.imag != 0]
    assert len(real) == 1 and len(comp) == 2
    assert abs(real[0].real - ctx.real(2) ** (ctx.real(1) / 3)) < ctx.tolerance
    assert abs(comp[0] - comp[1].conjugate()) < ctx.tolerance


def test_solve_numeric_repeated_roots(ctx):
    # (x - 1)^2 (x + 2) = x^3 - 3x + 2
    roots = solve_numeric(Cubic(Fraction(0), Fraction(-3), Fraction(2)), ctx)
    assert abs(roots[0].real + 2) < ctx.tolerance
    for r in roots[1:]:
        assert abs(r - 1) < ctx.tolerance ** Fraction(1, 2)


def test_permutation_exact_orbit(ctx):
    orbit = [S3 - 1, 2 + S3, (1 - S3) / 2]
    sigma = permutation_under(rsc_cycle(), orbit, ctx)
    assert sigma == (1, 2, 0)
    assert format_cycles(sigma) == "(0 1 2)"


def test_permutation_with_infinity(ctx):
    roots = [Fraction(0), Fraction(1), INFINITY]
    sigma = permutation_under(rsc_cycle(), roots, ctx)
    assert sigma == (1, 2, 0)


def test_permutation_numeric(ctx):
    roots = solve_numeric(rsc_from_b(Fraction(5)), ctx)
    sigma = permutation_under(rsc_cycle(), roots, ctx)
    assert sorted(sigma) == [0, 1, 2]
    assert all(sigma[i] != i for i in range(3))


def test_not_a_permutation(ctx):
    n = rsc_cycle()
    with pytest.raises(NotAPermutation):
        permutation_under(n, [Fraction(1), Fraction(2), Fraction(3)], ctx)
    with pytest.raises(NotAPermutation):
        permutation_under(n, [Fraction(1), Fraction(1), Fraction(2)], ctx)


def test_format_cycles():
    assert format_cycles((1, 2, 0)) == "(0 1 2)"
    assert format_cycles((0, 1, 2)) == "(0)(1)(2)"
    assert format_cycles((1, 0, 2)) == "(0 1)(2)"
    assert format_cycles((0,)) == "(0)"
