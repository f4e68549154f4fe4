"""Named end-to-end fixtures for the classical identities this library targets.

Each fixture rebuilds its identity from scratch (minimal polynomial, quadratic
field factor, shift, cube-root identity) and re-verifies every printed form at
the working precision, reporting one Check per verified statement.  They back
the command line `verify-paper` report and the regression tests.

Residual checks pass when |value| < ctx.tolerance (2^-128 at the default
256 bits).  Exact checks compare field elements, never floats.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .coslattice import (CosineRelation, cos_min_poly, cos_pipeline,
                         quad_cubic_factor)
from .cubic import Cubic, rsc_detect, rsc_from_b
from .field import as_field, field_sqrt
from .identity import build_identity, verify_value_is_root
from .mobius import rsc_cycle
from .precision import PrecisionContext, real_cbrt
from .shift import RamanujanShift, classify_and_shift


@dataclass(frozen=True)
class Check:
    """One verified statement inside a fixture."""

    label: str
    ok: bool
    residual_log2: Optional[float]  # None for exact-equality checks


@dataclass(frozen=True)
class FixtureResult:
    name: str
    description: str
    checks: Tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def worst_log2(self) -> Optional[float]:
        """Largest finite residual exponent, or None if all checks are exact."""
        finite = [c.residual_log2 for c in self.checks
                  if c.residual_log2 is not None
                  and c.residual_log2 != float("-inf")]
        return max(finite) if finite else None


def _residual(label: str, value, ctx: PrecisionContext) -> Check:
    r = ctx.fabs(value)
    return Check(label, bool(r < ctx.tolerance), ctx.log2_abs(r))


def _exact(label: str, ok: bool) -> Check:
    return Check(label, bool(ok), None)


def _exact_multiset(label: str, got: Sequence, want: Sequence) -> Check:
    pool = list(want)
    ok = len(got) == len(pool)
    if ok:
        for g in got:
            hit = next((i for i, w in enumerate(pool)
                        if g is not None and g == w), None)
            if hit is None:
                ok = False
                break
            pool.pop(hit)
    return _exact(label, ok)


def _numeric_multiset(label: str, got: Sequence, want: Sequence,
                      ctx: PrecisionContext) -> Check:
    if len(got) != len(want):
        return Check(label, False, None)
    pool = list(want)
    worst = ctx.real(0)
    for g in got:
        best = min(range(len(pool)), key=lambda i: ctx.fabs(g - pool[i]))
        worst = max(worst, ctx.fabs(g - pool[best]))
        pool.pop(best)
    return Check(label, bool(worst < ctx.tolerance), ctx.log2_abs(worst))


def _cos(ctx: PrecisionContext, num: int, den: int):
    # cos(num*pi/den)
    return ctx.cospi_frac(Fraction(num, den))


def _matches_some_relation(relations, target: CosineRelation) -> bool:
    return any(rel.proportional_to(target) is not None for rel in relations)


def _cbrt_ninths(ctx: PrecisionContext) -> List[Check]:
    lhs = (real_cbrt(Fraction(1, 9), ctx) - real_cbrt(Fraction(2, 9), ctx)
           + real_cbrt(Fraction(4, 9), ctx))
    rhs = real_cbrt(real_cbrt(2, ctx) - 1, ctx)
    checks = [_residual("cbrt(1/9) - cbrt(2/9) + cbrt(4/9) = cbrt(cbrt(2)-1)",
                        lhs - rhs, ctx)]
    rec = build_identity(rsc_from_b(0), ctx).scaled(Fraction(2, 9), ctx)
    checks.append(_exact_multiset(
        "radicands from the scaled B = 0 identity are 1/9, -2/9, 4/9",
        [r.exact for r in rec.lhs],
        [Fraction(1, 9), Fraction(-2, 9), Fraction(4, 9)]))
    checks.append(_residual("rebuilt identity residual", rec.residual, ctx))
    return checks


def _cbrt_cos_ninths(ctx: PrecisionContext) -> List[Check]:
    lhs = (real_cbrt(_cos(ctx, 2, 9), ctx) + real_cbrt(_cos(ctx, 4, 9), ctx)
           - real_cbrt(_cos(ctx, 1, 9), ctx))
    rhs = real_cbrt(Fraction(3, 2) * (real_cbrt(9, ctx) - 2), ctx)
    checks = [_residual(
        "cbrt(cos(2pi/9)) + cbrt(cos(4pi/9)) - cbrt(cos(pi/9)) "
        "= cbrt((3/2)(cbrt(9)-2))", lhs - rhs, ctx)]
    rec = build_identity(rsc_from_b(-3), ctx).scaled(Fraction(1, 2), ctx)
    checks.append(_numeric_multiset(
        "radicands from the halved B = -3 identity are the three cosines",
        [r.value for r in rec.lhs],
        [_cos(ctx, 2, 9), _cos(ctx, 4, 9), -_cos(ctx, 1, 9)], ctx))
    checks.append(_exact(
        "scaled right side is -3 + (3/2)cbrt(9)",
        rec.rhs_base == as_field(-3) and rec.rhs_coeff == Fraction(3, 2)
        and rec.rhs_inner == 9))
    checks.append(_residual("rebuilt identity residual", rec.residual, ctx))
    return checks


def _cos36_relation(ctx: PrecisionContext) -> List[Check]:
    s2, s6 = ctx.sqrt(2), ctx.sqrt(6)
    direct = (2 * s6 * _cos(ctx, 11, 36) + 6 * _cos(ctx, 10, 36)
              - (3 * s2 + s6) * _cos(ctx, 1, 36))
    checks = [_residual(
        "2sqrt(6)cos(11pi/36) + 6cos(10pi/36) = (3sqrt(2)+sqrt(6))cos(pi/36)",
        direct, ctx)]
    res = cos_pipeline(72, 1, ctx)
    target = CosineRelation(
        ((Fraction(1, 36), -(3 * field_sqrt(2) + field_sqrt(6))),
         (Fraction(5, 18), as_field(6)),
         (Fraction(11, 36), 2 * field_sqrt(6))),
        as_field(0))
    checks.append(_exact(
        "regenerated as an exact multiple of a root-cycle relation",
        _matches_some_relation(res.relations, target)))
    checks.append(_residual("pipeline identity residual",
                            res.identity.residual, ctx))
    return checks


def _cos26_root(ctx: PrecisionContext) -> List[Check]:
    s13 = ctx.sqrt(13)
    value = (-5 + s13
             + 2 * ctx.sqrt(26 - 6 * s13) * _cos(ctx, 1, 26)) / 2
    f = Cubic(Fraction(1), Fraction(-4), Fraction(1))
    return [_residual(
        "(-5 + sqrt(13) + 2sqrt(26-6sqrt(13))cos(pi/26))/2 is a root of "
        "x^3 + x^2 - 4x + 1", verify_value_is_root(value, f, ctx), ctx)]


def _cbrt_nine(ctx: PrecisionContext) -> List[Check]:
    res = cos_pipeline(36, 1, ctx)
    sh = res.shift
    checks = [
        _exact("shift values are a = 2, c = -sqrt(3) exactly",
               sh.a == as_field(2) and sh.c == -field_sqrt(3)),
        _exact("B = 9 exactly", res.identity.B == as_field(9)),
        _exact("shifted cubic is x^3 - 6x^2 + 3x + 1",
               rsc_from_b(res.identity.B)
               == Cubic(as_field(-6), as_field(3), as_field(1))),
    ]
    s3 = ctx.sqrt(3)
    printed = [2 + 2 * s3 * _cos(ctx, k, 18) for k in (1, 11, 13)]
    checks.append(_numeric_multiset(
        "radicands are 2 + 2sqrt(3)cos(k pi/18) for k in {1, 11, 13}",
        [r.value for r in res.identity.lhs], printed, ctx))
    lhs = sum(real_cbrt(v, ctx) for v in printed)
    checks.append(_residual("cube-root sum equals cbrt(9)",
                            lhs - real_cbrt(9, ctx), ctx))
    checks.append(_residual("pipeline identity residual",
                            res.identity.residual, ctx))
    return checks


def _cos18_relation(ctx: PrecisionContext) -> List[Check]:
    direct = (_cos(ctx, 5, 18) - 2 * _cos(ctx, 1, 18)
              + ctx.sqrt(3) * _cos(ctx, 2, 9))
    checks = [_residual("cos(5pi/18) = 2cos(pi/18) - sqrt(3)cos(2pi/9)",
                        direct, ctx)]
    res = cos_pipeline(36, 1, ctx)
    target = CosineRelation(
        ((Fraction(1, 18), as_field(-2)),
         (Fraction(2, 9), field_sqrt(3)),
         (Fraction(5, 18), as_field(1))),
        as_field(0))
    checks.append(_exact(
        "regenerated as an exact multiple of a root-cycle relation",
        _matches_some_relation(res.relations, target)))
    return checks


def _cos42_relation(ctx: PrecisionContext) -> List[Check]:
    s3, s7 = ctx.sqrt(3), ctx.sqrt(7)
    c1, c25 = _cos(ctx, 1, 42), _cos(ctx, 25, 42)
    direct = (s3 - s7) * c1 - 2 * s7 * c25 - 8 * c1 * c25 - 3
    checks = [_residual(
        "(sqrt(3)-sqrt(7))cos(pi/42) - 2sqrt(7)cos(25pi/42) "
        "- 8cos(pi/42)cos(25pi/42) = 3", direct, ctx)]
    res = cos_pipeline(84, 1, ctx)
    # product-to-sum form of the same statement
    target = CosineRelation(
        ((Fraction(1, 42), field_sqrt(3) - field_sqrt(7)),
         (Fraction(17, 42), 2 * field_sqrt(7)),
         (Fraction(8, 21), as_field(4)),
         (Fraction(3, 7), as_field(4))),
        as_field(-3))
    checks.append(_exact(
        "regenerated as an exact multiple of a root-cycle relation",
        _matches_some_relation(res.relations, target)))
    return checks


def _surd_cycle_cubic(ctx: PrecisionContext) -> List[Check]:
    s3 = field_sqrt(3)
    x1 = s3 - 1
    cycle = rsc_cycle()
    x2 = cycle.apply(x1)
    x3 = cycle.apply(x2)
    checks = [_exact(
        "orbit of sqrt(3)-1 under 1/(1-x) is 2+sqrt(3), (1-sqrt(3))/2",
        x2 == 2 + s3 and x3 == (1 - s3) / 2)]
    e1 = x1 + x2 + x3
    e2 = x1 * x2 + x1 * x3 + x2 * x3
    e3 = x1 * x2 * x3
    f = Cubic(-e1, e2, -e3)
    b = rsc_detect(f)
    checks.append(_exact("orbit product is an RSC with B = 3sqrt(3)",
                         b is not None and b == 3 * s3))
    rec = build_identity(f, ctx).scaled(2, ctx)
    checks.append(_exact_multiset(
        "doubled radicands are 2sqrt(3)-2, 2sqrt(3)+4, 1-sqrt(3)",
        [r.exact for r in rec.lhs],
        [2 * s3 - 2, 2 * s3 + 4, 1 - s3]))
    s3n = ctx.sqrt(3)
    lhs = (real_cbrt(2 * s3n - 2, ctx) + real_cbrt(1 - s3n, ctx)
           + real_cbrt(2 * s3n + 4, ctx))
    rhs = s3n * real_cbrt(1 + s3n * (real_cbrt(4, ctx) - 1), ctx)
    checks.append(_residual(
        "cbrt(2sqrt(3)-2) - cbrt(sqrt(3)-1) + cbrt(2sqrt(3)+4) "
        "= sqrt(3)cbrt(1 + sqrt(3)(cbrt(4)-1))", lhs - rhs, ctx))
    checks.append(_residual("rebuilt identity residual", rec.residual, ctx))
    return checks


def _cos21_chain(ctx: PrecisionContext) -> List[Check]:
    p = cos_min_poly(21, ctx)
    checks = [_exact(
        "minimal polynomial of 2cos(2pi/21) is "
        "x^6 - x^5 - 6x^4 + 6x^3 + 8x^2 - 8x + 1",
        tuple(p.coeffs) == (1, -8, 8, 6, -6, -1, 1))]
    s21 = field_sqrt(21)
    factor = quad_cubic_factor(p, 1, ctx)
    expected = Cubic((-1 - s21) / 2, (s21 - 1) / 2, (s21 - 5) / 2)
    checks.append(_exact(
        "factors over sqrt(21) into the expected cubic with companion roots "
        "2cos(8pi/21), 2cos(10pi/21)",
        factor is not None and factor.d == 21 and factor.cubic == expected
        and factor.root_indices == (1, 4, 5)))
    res = cos_pipeline(21, 1, ctx)
    sh = res.shift
    checks.append(_exact(
        "shift values are a = (3-sqrt(21))/2, c = -2, B = 8-sqrt(21) exactly",
        sh.a == (3 - s21) / 2 and sh.c == as_field(-2)
        and sh.B == 8 - s21))
    rec = res.identity.scaled(2, ctx)
    checks.append(_exact(
        "doubled right side is cbrt(-1-sqrt(21) + 6 cbrt(28-4sqrt(21)))",
        rec.rhs_base == -1 - s21 and rec.rhs_coeff == as_field(6)
        and rec.rhs_inner == 28 - 4 * s21))
    s21n = ctx.sqrt(21)
    lhs = sum(real_cbrt(3 - s21n + 8 * _cos(ctx, 2 * k, 21), ctx)
              for k in (1, 4, 5))
    rhs = real_cbrt(-1 - s21n + 6 * real_cbrt(28 - 4 * s21n, ctx), ctx)
    checks.append(_residual(
        "cube roots of 3-sqrt(21)+8cos(2k pi/21), k in {1, 4, 5}, sum to the "
        "nested cube root", lhs - rhs, ctx))
    checks.append(_residual("rebuilt identity residual", rec.residual, ctx))
    return checks


def _period_sums(ctx: PrecisionContext) -> List[Check]:
    f9 = Cubic(Fraction(-6), Fraction(3), Fraction(1))
    checks = []
    for pair in ((1, 2), (4, 7), (5, 8)):
        value = 2 + 2 * _cos(ctx, pair[0], 9) + 2 * _cos(ctx, pair[1], 9)
        checks.append(_residual(
            "2 + 2cos(%dpi/9) + 2cos(%dpi/9) is a root of "
            "x^3 - 6x^2 + 3x + 1" % pair,
            verify_value_is_root(value, f9, ctx), ctx))
    f13 = Cubic(Fraction(1), Fraction(-4), Fraction(1))
    for pair in ((2, 10), (4, 6), (8, 12)):
        value = 2 * _cos(ctx, pair[0], 13) + 2 * _cos(ctx, pair[1], 13)
        checks.append(_residual(
            "2cos(%dpi/13) + 2cos(%dpi/13) is a root of "
            "x^3 + x^2 - 4x + 1" % pair,
            verify_value_is_root(value, f13, ctx), ctx))
    s13 = ctx.sqrt(13)
    direct = (-5 + s13 + 2 * ctx.sqrt(26 - 6 * s13) * _cos(ctx, 1, 26)
              - 4 * _cos(ctx, 4, 13) - 4 * _cos(ctx, 6, 13))
    checks.append(_residual(
        "-5 + sqrt(13) + 2sqrt(26-6sqrt(13))cos(pi/26) "
        "= 4cos(4pi/13) + 4cos(6pi/13)", direct, ctx))
    return checks


def _biquadratic_shift(ctx: PrecisionContext) -> List[Check]:
    s2, s3 = field_sqrt(2), field_sqrt(3)
    s6 = s2 * s3
    f = Cubic(-(1 + s2 - s3), s2 - s3 - s6, s6)
    sh = classify_and_shift(f, ctx)
    target_b = -6 - s2 - 5 * s3 + s6
    checks = [_exact(
        "shift of (x-1)(x-sqrt(2))(x+sqrt(3)) has "
        "B = -6 - sqrt(2) - 5sqrt(3) + sqrt(6) exactly",
        isinstance(sh, RamanujanShift) and sh.B == target_b)]
    if not isinstance(sh, RamanujanShift):
        return checks
    root = -1 - s2 - s3 - s6
    p_b = rsc_from_b(sh.B)
    checks.append(_exact(
        "-1 - sqrt(2) - sqrt(3) - sqrt(6) is a root, by exact arithmetic",
        p_b.evaluate(root) == as_field(0)))
    checks.append(_residual(
        "the same root at working precision",
        verify_value_is_root(root.embed(ctx), p_b, ctx), ctx))
    s2n, s3n, s6n = ctx.sqrt(2), ctx.sqrt(3), ctx.sqrt(6)
    bn = target_b.embed(ctx)
    phi3 = ctx.atan(3 * s3n / bn) / 3
    cos_form = ((3 + bn) / 2
                + ctx.sqrt(27 + bn ** 2) * ctx.cos(-ctx.pi + phi3)) / 3
    checks.append(_residual(
        "the offset -pi branch of the cosine form hits the root",
        cos_form - root.embed(ctx), ctx))
    arctan_form = (2 * ctx.sqrt(2 * (73 - 9 * s2n + 28 * s3n - s6n))
                   * ctx.cos(phi3))
    checks.append(_residual(
        "3 + 5sqrt(2) + sqrt(3) + 7sqrt(6) "
        "= 2sqrt(2(73-9sqrt(2)+28sqrt(3)-sqrt(6)))cos(arctan(3sqrt(3)/B)/3)",
        arctan_form - (3 + 5 * s2n + s3n + 7 * s6n), ctx))
    return checks


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    run: Callable[[PrecisionContext], List[Check]]

    def __call__(self, ctx: PrecisionContext) -> FixtureResult:
        return FixtureResult(self.name, self.description,
                             tuple(self.run(ctx)))


FIXTURES: Tuple[Fixture, ...] = (
    Fixture("cbrt-ninths",
            "cbrt(1/9) - cbrt(2/9) + cbrt(4/9) = cbrt(cbrt(2)-1), rebuilt "
            "from the B = 0 cubic",
            _cbrt_ninths),
    Fixture("cbrt-cos-ninths",
            "cube roots of cos(2pi/9), cos(4pi/9), -cos(pi/9) summing to "
            "cbrt((3/2)(cbrt(9)-2)), from the B = -3 cubic",
            _cbrt_cos_ninths),
    Fixture("cos36-relation",
            "2sqrt(6)cos(11pi/36) + 6cos(10pi/36) = "
            "(3sqrt(2)+sqrt(6))cos(pi/36), direct and from the n = 72 "
            "pipeline",
            _cos36_relation),
    Fixture("cos26-root",
            "(-5 + sqrt(13) + 2sqrt(26-6sqrt(13))cos(pi/26))/2 is a root of "
            "x^3 + x^2 - 4x + 1",
            _cos26_root),
    Fixture("cbrt-nine",
            "three cube roots 2 + 2sqrt(3)cos(k pi/18) summing to cbrt(9), "
            "from the n = 36 pipeline",
            _cbrt_nine),
    Fixture("cos18-relation",
            "cos(5pi/18) = 2cos(pi/18) - sqrt(3)cos(2pi/9), direct and from "
            "the n = 36 pipeline",
            _cos18_relation),
    Fixture("cos42-relation",
            "(sqrt(3)-sqrt(7))cos(pi/42) - 2sqrt(7)cos(25pi/42) - "
            "8cos(pi/42)cos(25pi/42) = 3, direct and from the n = 84 "
            "pipeline",
            _cos42_relation),
    Fixture("surd-cycle-cubic",
            "the cubic whose roots are the 1/(1-x) orbit of sqrt(3)-1, its "
            "B = 3sqrt(3), and the doubled cube-root identity",
            _surd_cycle_cubic),
    Fixture("cos21-chain",
            "minimal polynomial of 2cos(2pi/21), its sqrt(21) factor, the "
            "shift, and the nested cube-root identity",
            _cos21_chain),
    Fixture("period-sums",
            "six two- and three-term cosine sums as roots of "
            "x^3 - 6x^2 + 3x + 1 and x^3 + x^2 - 4x + 1, plus the sqrt(13) "
            "link between them",
            _period_sums),
    Fixture("biquadratic-shift",
            "shift of (x-1)(x-sqrt(2))(x+sqrt(3)) and the arctan form of "
            "its root -1 - sqrt(2) - sqrt(3) - sqrt(6)",
            _biquadratic_shift),
)


def run_fixture(name: str, ctx: PrecisionContext) -> FixtureResult:
    for fixture in FIXTURES:
        if fixture.name == name:
            return fixture(ctx)
    raise KeyError(name)


def run_all(ctx: PrecisionContext) -> List[FixtureResult]:
    return [fixture(ctx) for fixture in FIXTURES]
