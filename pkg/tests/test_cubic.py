"""Monic cubics, the one-parameter family, and Serret invariants."""

from fractions import Fraction

import pytest

from rsckit import (
    Cubic,
    FieldElement,
    FieldMismatch,
    RepeatedRoots,
    discriminant,
    rsc_detect,
    rsc_from_b,
    serret_invariants,
)

S2 = FieldElement.sqrt_int(2)
S3 = FieldElement.sqrt_int(3)
S6 = FieldElement.sqrt_int(6)


def test_discriminant_oracles():
    assert Cubic(Fraction(0), Fraction(-3), Fraction(1)).discriminant() == 81
    assert Cubic(Fraction(0), Fraction(-3), Fraction(-1)).discriminant() == 81
    assert Cubic(Fraction(0), Fraction(0), Fraction(1)).discriminant() == -27
    # (x-1)^2 (x+2)
    assert Cubic(Fraction(0), Fraction(-3), Fraction(2)).discriminant() == 0
    f = Cubic(Fraction(1), Fraction(2), Fraction(3))
    assert discriminant(f) == f.discriminant()


def test_evaluate_exact_and_numeric(ctx):
    f = Cubic(Fraction(3), Fraction(3), Fraction(2))
    assert f.evaluate(Fraction(-1)) == 1
    # f = (x+1)^3 + 1, so f(-2+sqrt(2)) = (sqrt(2)-1)^3 + 1 = 5*sqrt(2) - 6
    assert f.evaluate(-2 + S2) == 5 * S2 - 6
    v = f.evaluate(ctx.real("0.5"), ctx)
    assert abs(v - ctx.real("4.375")) < ctx.tolerance


def test_is_exact_flags(ctx):
    assert Cubic(Fraction(1), Fraction(2), Fraction(3)).is_exact
    assert Cubic(S2, Fraction(0), Fraction(1)).is_exact
    assert not Cubic(ctx.real(1), ctx.real(2), ctx.real(3)).is_exact


def test_mixed_scalar_kinds_rejected(ctx):
    with pytest.raises(FieldMismatch):
        Cubic(Fraction(1), ctx.real(2), Fraction(3))


def test_str_forms():
    assert str(Cubic(Fraction(3), Fraction(3), Fraction(2))) \
        == "x^3 + 3*x^2 + 3*x + 2"
    assert str(Cubic(Fraction(0), Fraction(-3), Fraction(1))) \
        == "x^3 - 3*x + 1"
    assert str(Cubic(-(1 + S2 - S3), S2 - S3 - S6, S6)) \
        == "x^3 + (-1-sqrt(2)+sqrt(3))*x^2 + (sqrt(2)-sqrt(3)-sqrt(6))*x + sqrt(6)"
    assert str(Cubic(Fraction(1, 2), Fraction(0), Fraction(-1))) \
        == "x^3 + (1/2)*x^2 - 1"


def test_family_member_oracles():
    assert rsc_from_b(0) == Cubic(Fraction(-3, 2), Fraction(-3, 2), Fraction(1))
    assert rsc_from_b(1) == Cubic(Fraction(-2), Fraction(-1), Fraction(1))
    assert rsc_from_b(-3) == Cubic(Fraction(0), Fraction(-3), Fraction(1))
    assert rsc_from_b(9) == Cubic(Fraction(-6), Fraction(3), Fraction(1))
    assert rsc_from_b(-5) == Cubic(Fraction(1), Fraction(-4), Fraction(1))
    b = 8 - FieldElement.sqrt_int(21)
    p = rsc_from_b(b)
    assert p.P == -(3 + b) / 2 and p.Q == -(3 - b) / 2 and p.R == 1


def test_family_discriminant_is_square():
    for b in (Fraction(0), Fraction(7, 3), Fraction(-11, 2)):
        assert rsc_from_b(b).discriminant() == ((27 + b * b) / 4) ** 2


def test_detection_round_trip():
    for b in (Fraction(0), Fraction(1), Fraction(-3), Fraction(22, 7)):
        assert rsc_detect(rsc_from_b(b)) == b
    assert rsc_detect(rsc_from_b(3 * S3)) == 3 * S3


def test_detection_rejects_non_members():
    assert rsc_detect(Cubic(Fraction(0), Fraction(-3), Fraction(-1))) is None
    assert rsc_detect(Cubic(Fraction(-2), Fraction(-1), Fraction(2))) is None
    assert rsc_detect(Cubic(Fraction(1), Fraction(1), Fraction(1))) is None


def test_serret_oracle(ctx):
    # x^3 - 3x - 1: sqrt(disc) = 9, a = 1, b = 1, c = -1, d = 0
    f = Cubic(Fraction(0), Fraction(-3), Fraction(-1))
    s = serret_invariants(f, ctx)
    assert (s.a, s.b, s.c, s.d) == (1, 1, -1, 0)
    assert s.a * s.d - s.b * s.c == 1
    flipped = s.flipped()
    assert flipped.a * flipped.d - flipped.b * flipped.c == 1
    assert flipped.a == s.d and flipped.d == s.a


def test_serret_rejects_repeated_roots(ctx):
    with pytest.raises(RepeatedRoots):
        serret_invariants(Cubic(Fraction(0), Fraction(-3), Fraction(2)), ctx)
