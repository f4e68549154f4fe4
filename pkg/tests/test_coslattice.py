"""Minimal polynomials of 2cos(2pi/n), quadratic-field factors, mining."""

from fractions import Fraction

import pytest

from rsckit import (
    CosineRelation,
    Cubic,
    FieldElement,
    PrecisionContext,
    PrecisionTooLow,
    UnsupportedDegree,
    as_field,
    cos_min_poly,
    cos_pipeline,
    mine,
    primitive_ks,
    quad_cubic_factor,
)

S2 = FieldElement.sqrt_int(2)
S3 = FieldElement.sqrt_int(3)
S6 = FieldElement.sqrt_int(6)
S13 = FieldElement.sqrt_int(13)
S21 = FieldElement.sqrt_int(21)


def test_primitive_ks():
    assert primitive_ks(1) == ()
    assert primitive_ks(2) == ()
    assert primitive_ks(7) == (1, 2, 3)
    assert primitive_ks(9) == (1, 2, 4)
    assert primitive_ks(12) == (1, 5)
    assert primitive_ks(36) == (1, 5, 7, 11, 13, 17)


def test_cos_min_poly_strings(ctx):
    want = {
        1: "x - 2",
        2: "x + 2",
        5: "x^2 + x - 1",
        7: "x^3 + x^2 - 2x - 1",
        9: "x^3 - 3x + 1",
        12: "x^2 - 3",
        36: "x^6 - 6x^4 + 9x^2 - 3",
    }
    for n, s in want.items():
        assert str(cos_min_poly(n, ctx)) == s


def test_cos_min_poly_degree_and_roots(ctx):
    for n in (7, 16, 21, 40):
        p = cos_min_poly(n, ctx)
        ks = primitive_ks(n)
        assert p.degree == len(ks)
        for k in ks:
            v = p.evaluate(2 * ctx.cospi_frac(Fraction(2 * k, n)), ctx)
            assert abs(v) < ctx.tolerance * 4


def test_cos_min_poly_exact_evaluate(ctx):
    p = cos_min_poly(12, ctx)
    assert p.evaluate(S3).is_zero()
    assert p.evaluate(Fraction(2)) == 1


def test_cos_min_poly_errors(ctx, monkeypatch):
    with pytest.raises(ValueError):
        cos_min_poly(0, ctx)
    # validated polynomials are cached across contexts (they are exact), so
    # drop any cached n = 121 to exercise the low-precision failure path
    from rsckit.coslattice import _MIN_POLY_CACHE
    monkeypatch.delitem(_MIN_POLY_CACHE, 121, raising=False)
    low = PrecisionContext(bits=64)
    with pytest.raises(PrecisionTooLow):
        cos_min_poly(121, low)


def test_factor_degree_three(ctx):
    f = quad_cubic_factor(cos_min_poly(9, ctx), 1, ctx)
    assert f.d == 0 and f.exact
    assert f.root_indices == (1, 2, 4)
    assert f.cubic == Cubic(Fraction(0), Fraction(-3), Fraction(1))


def test_factor_degree_six(ctx):
    f = quad_cubic_factor(cos_min_poly(36, ctx), 1, ctx)
    assert (f.d, f.exact, f.root_indices) == (3, True, (1, 11, 13))
    assert f.cubic == Cubic(as_field(0), as_field(-3), -S3)

    g = quad_cubic_factor(cos_min_poly(13, ctx), 1, ctx)
    assert (g.d, g.root_indices) == (13, (1, 3, 4))
    assert g.cubic == Cubic((1 - S13) / 2, as_field(-1), (-3 + S13) / 2)


def test_factor_degree_twelve(ctx):
    f = quad_cubic_factor(cos_min_poly(72, ctx), 1, ctx)
    assert (f.d, f.exact, f.root_indices) == (2, True, (1, 23, 25))
    assert f.cubic == Cubic(as_field(0), as_field(-3), (-S2 - S6) / 2)
    # conjugate-product check: the factor really divides the degree-12 poly
    p = cos_min_poly(72, ctx)
    for k in f.root_indices:
        root = 2 * ctx.cospi_frac(Fraction(2 * k, 72))
        assert abs(f.cubic.evaluate(root, ctx)) < ctx.tolerance * 4
        assert abs(p.evaluate(root, ctx)) < ctx.tolerance * 4


def test_factor_numeric_fallback(ctx):
    f = quad_cubic_factor(cos_min_poly(52, ctx), 1, ctx)
    assert not f.exact
    assert (f.d, f.root_indices) == (13, (1, 9, 23))
    for k in f.root_indices:
        root = 2 * ctx.cospi_frac(Fraction(2 * k, 52))
        assert abs(f.cubic.evaluate(root, ctx)) < ctx.tolerance * 4


def test_factor_target_folding(ctx):
    p = cos_min_poly(36, ctx)
    f = quad_cubic_factor(p, 35, ctx)  # 35 = -1 mod 36 folds to 1
    assert f.root_indices == (1, 11, 13)
    with pytest.raises(ValueError):
        quad_cubic_factor(p, 6, ctx)


def test_pipeline_36(ctx):
    r = cos_pipeline(36, 1, ctx)
    assert (r.n, r.target_k) == (36, 1)
    assert (r.shift.a, r.shift.c, r.shift.B) == (2, -S3, 9)
    assert r.sigma == (2, 0, 1)
    assert len(r.relations) == 3
    assert r.relations[0].text() == (
        "-4*sqrt(3)*cos(pi/18) + 6*cos(2*pi/9) + 2*sqrt(3)*cos(5*pi/18) = 0")
    for rel in r.relations:
        assert abs(rel.value(ctx)) < ctx.tolerance * 64


def test_pipeline_13(ctx):
    r1 = cos_pipeline(13, 1, ctx)
    assert r1.identity.B == -5 + 2 * S13
    r2 = cos_pipeline(13, 2, ctx)
    assert r2.identity.B == 5 + 2 * S13
    assert r2.factor.root_indices == (2, 5, 6)


def test_pipeline_numeric_fallback(ctx):
    r = cos_pipeline(52, 1, ctx)
    assert not r.factor.exact
    assert r.identity.B == -5
    assert abs(r.shift.B - (-5)) < ctx.tolerance * 16
    assert r.relations == ()
    assert (r.identity.rhs_base, r.identity.rhs_coeff,
            r.identity.rhs_inner) == (-7, 3, 13)
    assert sorted(r.sigma) == [0, 1, 2] and all(r.sigma[i] != i
                                                for i in range(3))


def test_pipeline_unsupported_degree(ctx):
    with pytest.raises(UnsupportedDegree):
        cos_pipeline(11, 1, ctx)  # degree 5
    with pytest.raises(UnsupportedDegree):
        cos_pipeline(32, 1, ctx)  # degree 8


def test_mine_range(ctx):
    entries = mine(range(7, 16), ctx)
    assert [(e.n, e.target_k) for e in entries] == [
        (7, 1), (9, 1), (13, 1), (13, 2), (14, 1)]
    assert all(e.error is None for e in entries)
    assert all(e.result is not None for e in entries)
    # orbit dedup: the two n = 13 entries cover disjoint root sets
    a, b = entries[2].result, entries[3].result
    assert set(a.factor.root_indices).isdisjoint(b.factor.root_indices)
    assert set(a.factor.root_indices) | set(b.factor.root_indices) == set(
        primitive_ks(13))


def test_mine_near_miss_flag(ctx):
    entries = mine([9], ctx, near_miss=True)
    assert len(entries) == 1
    assert isinstance(entries[0].near_misses, tuple)


def test_relation_proportionality(ctx):
    r = cos_pipeline(36, 1, ctx)
    rel = r.relations[0]
    assert rel.proportional_to(rel) == 1
    doubled = CosineRelation(
        tuple((f, 2 * c) for f, c in rel.terms), 2 * rel.const)
    assert doubled.proportional_to(rel) == 2
    assert rel.proportional_to(doubled) == Fraction(1, 2)
    other = CosineRelation(((Fraction(1, 7), as_field(1)),), as_field(0))
    assert rel.proportional_to(other) is None
