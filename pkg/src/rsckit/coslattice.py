"""From cosines of rational angles to cube-root identities.

The chain implemented here:

1. cos_min_poly(n): the monic integer minimal polynomial of 2cos(2pi/n),
   degree phi(n)/2 for n >= 3. Built numerically from the primitive
   cosines and rounded, then cross-checked exactly: with D_0 = 2, D_1 = x,
   D_m = x D_{m-1} - D_{m-2} (so D_m(2cos t) = 2cos(mt)) and G_n the
   product of all cos_min_poly(d) over d | n, the identity

       G_n^2 = (D_n - 2) * (x - 2) * [(x + 2) if n even]

   must hold exactly, because both sides have the same roots 2cos(2pi k/n)
   with matching multiplicities. A rounding failure cannot pass this.

2. quad_cubic_factor: split the minimal polynomial into a cubic over a
   real quadratic field Q(sqrt(d)) whose roots include a chosen cosine,
   by recognizing elementary symmetric functions of root subsets and
   checking the conjugate product exactly. Degree 12 goes in two stages
   (6-subsets over one surd, then 3-subsets over a second); when the
   second stage has no exact answer because the degree-4 subfield is a
   cyclic quartic rather than biquadratic (n = 52 is the canonical case),
   a numeric cubic is returned and selected by whichever root grouping
   yields an exactly recognizable B.

3. cos_pipeline: factor, shift onto the Ramanujan family, build the
   cube-root identity with exact cosine radicands, and extract the
   cosine relations implied by the order-three permutation of the roots:
   from 1/(1 - x_i) = x_j one gets

       [(1-a)a - 1] + a c t_i - (1-a) c t_j - c^2 t_i t_j = 0,

   which after product-to-sum on t_i t_j = 4 cos A cos B is a linear
   relation among cosines with coefficients in the factor's field.

4. mine: run the pipeline over a range of n, one entry per root orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import poly
from .cubic import Cubic, rsc_from_b
from .errors import (FieldTooLarge, PrecisionTooLow, RsckitError,
                     UnsupportedDegree, VerificationFailed)
from .field import (FieldElement, as_field, height_cap, recognize,
                    squarefree_kernel)
from .identity import CosForm, IdentityRecord, build_identity
from .mobius import rsc_cycle
from .precision import PrecisionContext, is_complex_scalar, is_numeric_scalar
from .roots import permutation_under
from .shift import ShiftResult, Translation, classify_and_shift

DEFAULT_HEIGHT = 10 ** 6
_FALLBACK_D_BOUND = 1000
# symmetric functions of cosine subsets have tiny numerators, so their
# recognition runs at a small height regardless of the user-facing bound
_SUBSET_HEIGHT = 64
_B_HEIGHT = 1000

# exact values of cos(r*pi) for the small denominators that can appear
# after angle folding; used to move such terms into a relation's constant
_COS_TABLE: Dict[Fraction, FieldElement] = {}


def _cos_table() -> Dict[Fraction, FieldElement]:
    if not _COS_TABLE:
        r2 = FieldElement.sqrt_int(2)
        r3 = FieldElement.sqrt_int(3)
        r5 = FieldElement.sqrt_int(5)
        r6 = FieldElement.sqrt_int(6)
        _COS_TABLE.update({
            Fraction(1, 3): as_field(Fraction(1, 2)),
            Fraction(1, 4): r2 / 2,
            Fraction(1, 6): r3 / 2,
            Fraction(1, 5): (1 + r5) / 4,
            Fraction(2, 5): (-1 + r5) / 4,
            Fraction(1, 12): (r6 + r2) / 4,
            Fraction(5, 12): (r6 - r2) / 4,
        })
    return _COS_TABLE


def primitive_ks(n: int) -> Tuple[int, ...]:
    """k with 1 <= k < n/2 and gcd(k, n) = 1; empty for n <= 2."""
    return tuple(k for k in range(1, (n + 1) // 2)
                 if 2 * k != n and math.gcd(k, n) == 1)


@dataclass(frozen=True)
class CosMinPoly:
    """Monic integer minimal polynomial of 2cos(2pi/n), ascending coeffs."""

    n: int
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x, ctx: Optional[PrecisionContext] = None):
        if is_numeric_scalar(x):
            return poly.evaluate([x * 0 + c for c in self.coeffs], x)
        return poly.evaluate([as_field(c) for c in self.coeffs], as_field(x))

    def __str__(self) -> str:
        parts = []
        for m in range(self.degree, -1, -1):
            c = self.coeffs[m]
            if c == 0:
                continue
            if not parts:
                if m == 0:
                    parts.append(str(c))
                else:
                    head = "" if c == 1 else ("-" if c == -1 else str(c))
                    mono = f"x^{m}" if m > 1 else "x"
                    parts.append(head + mono)
                continue
            sign = " - " if c < 0 else " + "
            c = abs(c)
            if m == 0:
                parts.append(f"{sign}{c}")
            else:
                mono = f"x^{m}" if m > 1 else "x"
                parts.append(sign + (mono if c == 1 else f"{c}{mono}"))
        return "".join(parts) if parts else "0"


_MIN_POLY_CACHE: Dict[int, CosMinPoly] = {}


def _dickson(n: int) -> List[int]:
    """D_n with D_n(2cos t) = 2cos(nt): D_0 = 2, D_1 = x, ascending."""
    prev, cur = [2], [0, 1]
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, poly.add([0] + cur, [-c for c in prev])
    return cur


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _crosscheck(n: int) -> None:
    """Exact identity G_n^2 = (D_n - 2)(x - 2)[(x + 2)] or PrecisionTooLow."""
    G = [1]
    for d in _divisors(n):
        G = poly.mul(G, list(_MIN_POLY_CACHE[d].coeffs))
    lhs = poly.mul(G, G)
    rhs = poly.mul(poly.add(_dickson(n), [-2]), [-2, 1])
    if n % 2 == 0:
        rhs = poly.mul(rhs, [2, 1])
    if poly.trim(lhs) != poly.trim(rhs):
        raise PrecisionTooLow(
            f"minimal polynomial for n = {n} fails the exact product check")


def cos_min_poly(n: int, ctx: PrecisionContext) -> CosMinPoly:
    """Minimal polynomial of 2cos(2pi/n), exactly validated.

    The coefficients come from the numeric product over primitive cosines
    (error must round away below 1e-20, else PrecisionTooLow); the rounded
    result is then validated by an exact polynomial identity tying all
    divisors' polynomials together, so a wrong rounding cannot escape.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n in _MIN_POLY_CACHE:
        return _MIN_POLY_CACHE[n]
    if n == 1:
        out = CosMinPoly(1, (-2, 1))
    elif n == 2:
        out = CosMinPoly(2, (2, 1))
    else:
        prod = [ctx.real(1)]
        for k in primitive_ks(n):
            root = 2 * ctx.cospi_frac(Fraction(2 * k, n))
            prod = poly.mul(prod, [-root, ctx.real(1)])
        ints = []
        bound = ctx.real(1) / ctx.real(10) ** 20
        for c in prod:
            r = ctx.nearest_int(c)
            if abs(c - r) > bound:
                raise PrecisionTooLow(
                    f"coefficient {ctx.nstr(c, 30)} of n = {n} does not round")
            ints.append(r)
        out = CosMinPoly(n, tuple(ints))
    for d in _divisors(n):
        if d != n and d not in _MIN_POLY_CACHE:
            cos_min_poly(d, ctx)
    _MIN_POLY_CACHE[n] = out
    try:
        _crosscheck(n)
    except PrecisionTooLow:
        del _MIN_POLY_CACHE[n]
        raise
    return out


@dataclass(frozen=True)
class QuadCubicFactor:
    """Cubic factor of a CosMinPoly over Q(sqrt(d)) (d = 0: rational).

    root_indices are the k values (as in primitive_ks) whose cosines
    2cos(2pi k/n) are the cubic's roots. For exact factors the product
    with the surd conjugate reproduces the minimal polynomial exactly;
    `exact` is False only for the numeric fallback where the coefficient
    field is a cyclic quartic that two square roots cannot express.
    """

    d: int
    cubic: Cubic
    root_indices: Tuple[int, ...]
    n: int
    exact: bool = True


def _d_candidates(p: CosMinPoly, ctx: PrecisionContext
                  ) -> Tuple[List[int], List[int]]:
    """Square-free d to try: (kernel candidates, small-d fallback).

    Kernel candidates are products of primes dividing the polynomial's
    discriminant; every quadratic subfield ramifies only at such primes,
    so they always contain the true d. The fallback list of all remaining
    square-free d up to 1000 is a safety net for the single-surd stages.
    The discriminant is a (possibly huge) integer, so it is recomputed at
    a precision high enough to round exactly before factoring.
    """
    deg = p.degree
    hi = PrecisionContext(bits=max(ctx.bits, 2 * deg * (deg - 1) + 128))
    roots = [2 * hi.cospi_frac(Fraction(2 * k, p.n))
             for k in primitive_ks(p.n)]
    disc = hi.real(1)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            disc *= (roots[i] - roots[j]) ** 2
    disc_int = hi.nearest_int(disc)
    if abs(disc - disc_int) > hi.real(1) / 10 ** 15:
        raise PrecisionTooLow(f"discriminant of n = {p.n} does not round")
    primes = []
    m = abs(disc_int)
    f = 2
    while f * f <= m and f < 100_000:
        if m % f == 0:
            primes.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if 1 < m < 10 ** 12:
        k = squarefree_kernel(m)
        if k > 1 and k not in primes:
            primes.append(k)
    kernels: List[int] = []
    for bits in range(1, 1 << len(primes)):
        d = 1
        for i, q in enumerate(primes):
            if bits >> i & 1:
                d *= q
        if d > 1 and d == squarefree_kernel(d) and d not in kernels:
            kernels.append(d)
    kernels.sort()
    fallback = [d for d in range(2, _FALLBACK_D_BOUND + 1)
                if d == squarefree_kernel(d) and d not in kernels]
    return kernels, fallback


def _symmetric_functions(values: Sequence[Any]) -> List[Any]:
    """Elementary symmetric functions e1..em, numerically."""
    one = values[0] * 0 + 1
    prod = [one]
    for v in values:
        prod = poly.mul(prod, [-v, one])
    m = len(values)
    return [prod[m - i] * (-1) ** i for i in range(1, m + 1)]


def _recognize_subset(values: Sequence[Any], gens: Tuple[int, ...],
                      ctx: PrecisionContext, height: int = DEFAULT_HEIGHT
                      ) -> Optional[List[FieldElement]]:
    """Exact symmetric functions of the subset over Q(gens), or None."""
    height = min(height, _SUBSET_HEIGHT, height_cap(gens))
    es = _symmetric_functions(values)
    out = []
    for e in es:
        try:
            r = recognize(e, gens, height, ctx)
        except FieldTooLarge:
            return None
        if r is None:
            return None
        out.append(r)
    return out


def _conjugate_fixing(e: FieldElement, fixed: int) -> FieldElement:
    """The nontrivial automorphism of e's quadratic extension that fixes
    Q(sqrt(fixed)) pointwise (fixed = 1: fixes Q; e must then live in a
    single quadratic field).

    Elements store reduced generator sets, so the decision is made per
    element: a single-surd element flips unless its surd is the fixed
    one; a two-surd element flips the two basis literals the automorphism
    moves, which depend on where sqrt(fixed) sits among the literals.
    """
    g = e.gens
    if not g:
        return e
    fk = squarefree_kernel(fixed) if fixed > 1 else 1
    conjs = e.conjugates()
    if len(g) == 1:
        return e if g[0] == fk else conjs[1]
    g1, g2 = g
    k12 = squarefree_kernel(g1 * g2)
    # conjugates() order: identity, flip gens[1], flip gens[0], flip both
    if fk == g1:
        return conjs[1]
    if fk == g2:
        return conjs[2]
    if fk == k12:
        return conjs[3]
    raise ValueError(f"Q(sqrt({fixed})) is not a subfield of Q{g}")


def _poly_from_es(es: Sequence[FieldElement]) -> List[FieldElement]:
    """Monic polynomial coefficients (ascending) with given e1..em."""
    m = len(es)
    coeffs = [as_field(0)] * (m + 1)
    coeffs[m] = as_field(1)
    for i, e in enumerate(es, start=1):
        coeffs[m - i] = e * (-1) ** i
    return coeffs


def _subsets_with(pool: Sequence[int], size: int, must_have: int):
    others = [i for i in pool if i != must_have]
    for rest in combinations(others, size - 1):
        yield tuple(sorted((must_have,) + rest))


def _order3_orbit(n: int, k: int) -> Tuple[int, ...]:
    """Orbit of k under the order-3 subgroup of (Z/n)*/{+-1}.

    The group acts simply transitively on the primitive cosine angles, so
    this orbit is exactly the root set of the cosine's minimal cubic over
    the group's degree-4 fixed field. The 3-Sylow subgroup of an abelian
    group of order 12 is unique, so any order-3 element gives the orbit.
    """
    def fold(j: int) -> int:
        j %= n
        return min(j, n - j)

    for m in range(2, n - 1):
        if math.gcd(m, n) != 1:
            continue
        if fold(m) == 1 or fold(m * m) == 1:
            continue
        if fold(m ** 3) == 1:
            return tuple(sorted({fold(k), fold(k * m), fold(k * m * m)}))
    raise ValueError(f"(Z/{n})*/+- has no order-3 element")


def quad_cubic_factor(p: CosMinPoly, target_k: int, ctx: PrecisionContext,
                      height: int = DEFAULT_HEIGHT
                      ) -> Optional[QuadCubicFactor]:
    """Cubic factor of p over a quadratic (or biquadratic) field whose
    roots include 2cos(2pi target_k/n). None when no grouping works.

    Degree 3 returns p itself with d = 0. Degree 6 recognizes 3-subsets
    over one square root and checks the conjugate product against p
    exactly. Degree 12 first splits off a sextic over one square root via
    6-subsets, then factors that sextic by 3-subsets over a second square
    root; when no two-surd expression exists (cyclic quartic tower), the
    grouping whose shift invariant B is exactly recognizable is returned
    as a numeric cubic with exact = False.
    """
    ks = primitive_ks(p.n)
    if target_k not in ks:
        t = target_k % p.n
        target_k = min(t, p.n - t)
    if target_k not in ks:
        raise ValueError(
            f"target k = {target_k} is not primitive for n = {p.n}")
    deg = p.degree
    if deg == 3:
        c0, c1, c2, _ = p.coeffs
        return QuadCubicFactor(0, Cubic(c2, c1, c0), ks, p.n)
    if deg not in (6, 12):
        return None
    roots = [2 * ctx.cospi_frac(Fraction(2 * k, p.n)) for k in ks]
    t_idx = ks.index(target_k)
    kernels, fallback = _d_candidates(p, ctx)

    def single_surd_factor(pool, values, size, must_have, target):
        """First (subset, coeffs, d) whose conjugate product is target."""
        for d in kernels + fallback:
            for subset in _subsets_with(pool, size, must_have):
                es = _recognize_subset([values[i] for i in subset], (d,),
                                       ctx, height)
                if es is None:
                    continue
                coeffs = _poly_from_es(es)
                conj = [_conjugate_fixing(c, 1) for c in coeffs]
                got = poly.mul(coeffs, conj)
                if poly.trim(got) == poly.trim(list(target)):
                    return subset, coeffs, d
        return None

    exact_p = [as_field(c) for c in p.coeffs]
    if deg == 6:
        hit = single_surd_factor(range(6), roots, 3, t_idx, exact_p)
        if hit is None:
            return None
        subset, coeffs, d = hit
        cubic = Cubic(coeffs[2], coeffs[1], coeffs[0])
        return QuadCubicFactor(d, cubic, tuple(ks[i] for i in subset), p.n)

    # degree 12, stage one: a sextic over a single square root
    stage1 = single_surd_factor(range(12), roots, 6, t_idx, exact_p)
    if stage1 is None:
        return None
    subset6, sextic, d1 = stage1
    vals6 = [roots[i] for i in subset6]
    t_in_6 = subset6.index(t_idx)

    # stage two, exact: 3-subsets over a second square root; ramification
    # confines d2 to the kernel candidates, so the fallback list is skipped
    for d2 in kernels:
        if d2 == d1:
            continue
        for sub3 in _subsets_with(range(6), 3, t_in_6):
            es = _recognize_subset([vals6[i] for i in sub3], (d1, d2), ctx,
                                   height)
            if es is None:
                continue
            coeffs = _poly_from_es(es)
            conj = [_conjugate_fixing(c, d1) for c in coeffs]
            got = poly.mul(coeffs, conj)
            if poly.trim(got) == poly.trim(list(sextic)):
                cubic = Cubic(coeffs[2], coeffs[1], coeffs[0])
                idxs = tuple(ks[subset6[i]] for i in sub3)
                return QuadCubicFactor(d1, cubic, idxs, p.n)

    # stage two, numeric: no two-surd coefficient field exists, so take
    # the Galois orbit of the target (the true root grouping) numerically
    orbit = _order3_orbit(p.n, target_k)
    sextic_ks = set(ks[i] for i in subset6)
    if not set(orbit) <= sextic_ks:
        return None
    vals3 = [roots[ks.index(k)] for k in orbit]
    es = _symmetric_functions(vals3)
    cubic = Cubic(-es[0], es[1], -es[2])
    return QuadCubicFactor(d1, cubic, orbit, p.n, exact=False)


@dataclass(frozen=True)
class CosineRelation:
    """const + sum of coeff * cos(frac * pi) = 0, exact coefficients."""

    terms: Tuple[Tuple[Fraction, FieldElement], ...]
    const: FieldElement

    def value(self, ctx: PrecisionContext):
        acc = self.const.embed(ctx)
        for frac, coeff in self.terms:
            acc += coeff.embed(ctx) * ctx.cospi_frac(frac)
        return acc

    def proportional_to(self, other: "CosineRelation"
                        ) -> Optional[FieldElement]:
        """lam with self = lam * other exactly, or None."""
        mine = dict(self.terms)
        theirs = dict(other.terms)
        if set(mine) != set(theirs):
            return None
        lam = None
        for frac in mine:
            if theirs[frac].is_zero():
                return None
            ratio = mine[frac] / theirs[frac]
            if lam is None:
                lam = ratio
            elif ratio != lam:
                return None
        if lam is None:
            return None
        if self.const != lam * other.const:
            return None
        return lam

    @staticmethod
    def _term_text(coeff: FieldElement, frac: Fraction) -> str:
        n, d = frac.numerator, frac.denominator
        pi = "pi" if n == 1 else f"{n}*pi"
        ang = pi if d == 1 else f"{pi}/{d}"
        cs = str(coeff)
        if cs == "1":
            return f"cos({ang})"
        if ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs:
            cs = f"({cs})"
        return f"{cs}*cos({ang})"

    def text(self) -> str:
        parts = [self._term_text(c, f) for f, c in self.terms]
        lhs = parts[0]
        for p in parts[1:]:
            lhs += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return f"{lhs} = {-self.const}"


def _fold_angle(frac: Fraction) -> Tuple[Fraction, int]:
    """Canonical angle in [0, 1/2] with the sign of its cosine factor."""
    frac = frac % 2
    if frac > 1:
        frac = 2 - frac
    if frac > Fraction(1, 2):
        return 1 - frac, -1
    return frac, 1


def cosine_relations(a: FieldElement, c: FieldElement,
                     fracs: Sequence[Fraction], sigma: Sequence[int],
                     ctx: PrecisionContext) -> List[CosineRelation]:
    """The three cosine relations implied by 1/(1 - x_i) = x_sigma(i).

    fracs[i]*pi is the angle of t_i = 2cos(fracs[i]*pi); x_i = a - c*t_i.
    Each relation is numerically verified before being returned.
    """
    table = _cos_table()
    out = []
    for i, frac_i in enumerate(fracs):
        j = sigma[i]
        frac_j = fracs[j]
        terms: Dict[Fraction, FieldElement] = {}
        const = (1 - a) * a - 1

        def add(frac: Fraction, coeff: FieldElement):
            nonlocal const
            frac, sign = _fold_angle(frac)
            if sign < 0:
                coeff = -coeff
            if frac == 0:
                const = const + coeff
                return
            if frac == Fraction(1, 2):
                return
            if frac in table:
                try:
                    const = const + coeff * table[frac]
                    return
                except FieldTooLarge:
                    pass
            terms[frac] = terms.get(frac, as_field(0)) + coeff

        add(frac_i, 2 * a * c)
        add(frac_j, -2 * (1 - a) * c)
        add(abs(frac_i - frac_j), -2 * c * c)
        add(frac_i + frac_j, -2 * c * c)
        items = tuple(sorted(((f, co) for f, co in terms.items()
                              if not co.is_zero()), key=lambda t: t[0]))
        rel = CosineRelation(items, const)
        scale = 1 + max((abs(co.embed(ctx)) for _, co in items),
                        default=ctx.real(0))
        if abs(rel.value(ctx)) > ctx.tolerance * scale * 16:
            raise VerificationFailed(
                f"cosine relation for pair ({i}, {j}) fails numerically")
        out.append(rel)
    return out


@dataclass(frozen=True)
class PipelineResult:
    n: int
    target_k: int
    factor: QuadCubicFactor
    shift: ShiftResult
    identity: IdentityRecord
    sigma: Tuple[int, ...]
    relations: Tuple[CosineRelation, ...]


def cos_pipeline(n: int, target_k: int, ctx: PrecisionContext,
                 height: int = DEFAULT_HEIGHT) -> PipelineResult:
    """Minimal polynomial -> quadratic-field cubic -> shift -> identity.

    Supported degrees phi(n)/2: 3, 6, 12 (UnsupportedDegree otherwise).
    For exact factors the identity's radicands carry their cosine forms
    and the permutation-derived cosine relations come along; the numeric
    fallback recognizes B exactly when it can and builds the identity for
    that Ramanujan cubic instead.
    """
    p = cos_min_poly(n, ctx)
    if p.degree not in (3, 6, 12):
        raise UnsupportedDegree(
            f"phi({n})/2 = {p.degree} is outside the supported degrees")
    factor = quad_cubic_factor(p, target_k, ctx, height)
    if factor is None:
        raise VerificationFailed(
            f"no quadratic-field cubic factor found for n = {n}")
    f = factor.cubic
    shift = classify_and_shift(f, ctx)
    if isinstance(shift, Translation):
        raise UnsupportedDegree(
            f"the n = {n} factor is a translation of x^3; no identity")
    fracs = [Fraction(2 * k, n) for k in factor.root_indices]
    if factor.exact and shift.is_exact:
        forms = [CosForm(shift.a, -2 * shift.c, frac) for frac in fracs]
        identity = build_identity(f, ctx, lhs_cos=forms)
        shifted = [form.value(ctx) for form in forms]
        sigma = permutation_under(rsc_cycle(), shifted, ctx)
        relations = tuple(cosine_relations(shift.a, shift.c, fracs, sigma,
                                           ctx))
    else:
        B = shift.B
        B_exact = None
        if not is_complex_scalar(B) or B.imag == 0:
            Br = B.real if is_complex_scalar(B) else B
            gens = (factor.d,) if factor.d else ()
            b_height = min(height, _B_HEIGHT, height_cap(gens))
            B_exact = recognize(Br, gens, b_height, ctx)
        if B_exact is not None:
            identity = build_identity(rsc_from_b(B_exact), ctx)
        else:
            identity = build_identity(f, ctx)
        shifted = [shift.to_rsc_root(2 * ctx.cospi_frac(fr)) for fr in fracs]
        sigma = permutation_under(rsc_cycle(), shifted, ctx)
        relations = ()
    return PipelineResult(n, target_k, factor, shift, identity, sigma,
                          relations)


@dataclass(frozen=True)
class MineEntry:
    n: int
    target_k: int
    result: Optional[PipelineResult]
    error: Optional[str] = None
    near_misses: Tuple[str, ...] = ()


def _near_misses(result: PipelineResult, ctx: PrecisionContext
                 ) -> Tuple[str, ...]:
    """Radicand values suspiciously close to (but not at) small rationals."""
    notes = []
    lo = ctx.tolerance
    hi = ctx.real(1) / 10 ** 5
    for r in result.identity.lhs:
        v = r.value
        if is_complex_scalar(v):
            continue
        approx = Fraction(float(v)).limit_denominator(10 ** 4)
        gap = abs(v - ctx.real(approx))
        if lo < gap < hi:
            notes.append(f"radicand {ctx.nstr(v, 12)} is within "
                         f"{ctx.nstr(gap, 3)} of {approx}")
    return tuple(notes)


def mine(n_range: Sequence[int], ctx: PrecisionContext,
         height: int = DEFAULT_HEIGHT, near_miss: bool = False
         ) -> List[MineEntry]:
    """Pipeline over a range of n, one entry per distinct root orbit.

    For each supported n the smallest uncovered primitive k seeds a
    pipeline run; the returned factor's root indices are then marked
    covered, so each cubic factor appears once. Failures become entries
    with the error message; unsupported degrees are skipped silently.
    """
    entries: List[MineEntry] = []
    for n in sorted(set(n_range)):
        ks = primitive_ks(n)
        if len(ks) not in (3, 6, 12):
            continue
        covered: set = set()
        for k in ks:
            if k in covered:
                continue
            try:
                result = cos_pipeline(n, k, ctx, height)
            except RsckitError as exc:
                entries.append(
                    MineEntry(n, k, None, f"{type(exc).__name__}: {exc}"))
                covered.add(k)
                continue
            notes = _near_misses(result, ctx) if near_miss else ()
            entries.append(MineEntry(n, k, result, None, notes))
            covered.update(result.factor.root_indices)
    return entries
