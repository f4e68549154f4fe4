"""Property-based checks over random inputs."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from rsckit import (
    Cubic,
    FieldElement,
    INFINITY,
    MobiusMap,
    PrecisionContext,
    as_field,
    parse_coeff,
    recognize,
    rsc_detect,
    rsc_from_b,
    rsc_trig_roots,
    serret_invariants,
    solve_numeric,
    verify_shift,
    classify_and_shift,
)

CTX = PrecisionContext(bits=256)

small_fractions = st.fractions(min_value=-10, max_value=10,
                               max_denominator=12)
tiny_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)

_GEN_PAIRS = [(), (2,), (3,), (5,), (7,), (2, 3), (3, 5), (2, 7)]


def _element_over(draw, gens, coeffs):
    out = as_field(draw(coeffs))
    for g in gens:
        out = out + draw(coeffs) * FieldElement.sqrt_int(g)
    if len(gens) == 2:
        out = out + draw(coeffs) * FieldElement.sqrt_int(gens[0] * gens[1])
    return out


@st.composite
def field_elements(draw, gens_pool=_GEN_PAIRS, coeffs=tiny_fractions):
    return _element_over(draw, draw(st.sampled_from(gens_pool)), coeffs)


@st.composite
def field_element_tuples(draw, size, coeffs=tiny_fractions):
    """size elements sharing one field, so any arithmetic mix is legal."""
    gens = draw(st.sampled_from(_GEN_PAIRS))
    return tuple(_element_over(draw, gens, coeffs) for _ in range(size))


@given(field_element_tuples(3))
def test_field_ring_axioms(abc):
    a, b, c = abc
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert (a - a).is_zero()
    assert a + b == b + a
    if not b.is_zero():
        assert (a / b) * b == a


@given(field_element_tuples(2))
def test_embed_is_a_homomorphism(ab):
    a, b = ab
    ea, eb = a.embed(CTX), b.embed(CTX)
    scale = (1 + abs(ea)) * (1 + abs(eb))
    assert abs((a + b).embed(CTX) - (ea + eb)) < CTX.tolerance * scale
    assert abs((a * b).embed(CTX) - ea * eb) < CTX.tolerance * scale


@given(field_elements(gens_pool=[(), (2,), (3,), (5,), (7,), (13,)],
                      coeffs=st.fractions(min_value=-50, max_value=50,
                                          max_denominator=16)))
def test_recognize_round_trip(e):
    got = recognize(e.embed(CTX), e.gens, 100_000, CTX)
    assert got == e


@given(field_elements())
def test_parse_str_round_trip(e):
    assert parse_coeff(str(e)) == e


@given(small_fractions)
def test_rsc_discriminant_is_a_square(B):
    disc = rsc_from_b(B).discriminant()
    assert disc == (Fraction(27 + B * B, 4)) ** 2


@given(small_fractions, small_fractions)
def test_negating_b_mirrors_the_family(B, x):
    # p_{-B}(x) = -p_B(1 - x)
    assert rsc_from_b(-B).evaluate(x) == -rsc_from_b(B).evaluate(1 - x)


@given(small_fractions, small_fractions, small_fractions)
def test_rsc_detect_iff(P, Q, R):
    f = Cubic(P, Q, R)
    B = rsc_detect(f)
    member = R == 1 and P + Q == -3
    assert (B is not None) == member
    if member:
        assert B == -2 * P - 3
        assert rsc_from_b(B) == f


@given(small_fractions)
def test_rsc_detect_on_the_family(B):
    assert rsc_detect(rsc_from_b(B)) == B


@given(st.lists(small_fractions, min_size=3, max_size=3, unique=True))
def test_serret_data_is_unimodular(roots):
    r1, r2, r3 = roots
    P = -(r1 + r2 + r3)
    Q = r1 * r2 + r1 * r3 + r2 * r3
    R = -(r1 * r2 * r3)
    assume(3 * Q != P * P)
    f = Cubic(P, Q, R)
    s = serret_invariants(f, CTX)
    assert s.a * s.d - s.b * s.c == 1
    assert s.a + s.d == 1
    shift = classify_and_shift(f, CTX)
    assert shift.B == 6 * s.a + 2 * s.c * P - 3 \
        or shift.B == 6 * s.flipped().a + 2 * s.flipped().c * P - 3
    assert verify_shift(f, shift, CTX)


@given(tiny_fractions, tiny_fractions,
       st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=6))
def test_solver_on_negative_discriminants(r, p, bump):
    # (x - r)(x^2 + px + q) with q > p^2/4 has one real root
    q = Fraction(p * p, 4) + bump
    f = Cubic(p - r, q - r * p, -r * q)
    assert f.discriminant() < 0
    roots = solve_numeric(f, CTX)
    real = [z for z in roots if z.imag == 0]
    pair = [z for z in roots if z.imag != 0]
    assert len(real) == 1 and len(pair) == 2
    assert abs(real[0].real - r) < CTX.tolerance * (1 + abs(r)) * 16
    assert abs(pair[0] - pair[1].conjugate()) < CTX.tolerance * 16


@given(st.fractions(min_value=-50, max_value=50, max_denominator=8))
def test_trig_roots_match_the_solver(B):
    trig = sorted(t.value for t in rsc_trig_roots(B, CTX))
    num = solve_numeric(rsc_from_b(B), CTX)
    assert all(z.imag == 0 for z in num)
    gap = CTX.real(2) ** -120
    for t, z in zip(trig, num):
        assert abs(t - z.real) < gap


_entries = st.integers(min_value=-6, max_value=6)


@given(_entries, _entries, _entries, _entries, small_fractions)
def test_mobius_compose_agrees_with_apply(a, b, c, d, x):
    assume(a * d - b * c != 0)
    m = MobiusMap(Fraction(a), Fraction(b), Fraction(c), Fraction(d))
    n = MobiusMap(Fraction(0), Fraction(1), Fraction(-1), Fraction(1))
    lhs = m.compose(n).apply(x)
    inner = n.apply(x)
    rhs = m.apply(inner)
    if lhs is INFINITY or rhs is INFINITY:
        assert lhs is rhs
    else:
        assert lhs == rhs
