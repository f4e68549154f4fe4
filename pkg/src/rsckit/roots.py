"""Trigonometric root formulas for the Ramanujan family, plus oracles.

For real B the three roots of p_B are

    s_k = (1/3) [ (3+B)/2 + sqrt(27+B^2) cos(k pi/3 + phi/3) ],
    phi = arctan(3 sqrt(3) / B),

with k in {2, 4, 6} for B > 0 and k in {1, 3, 5} for B < 0. At B = 0 the
arctan blows up but both parities converge to the same three values, so we
use the limiting angle phi/3 = pi/6 and tag the roots with the even k's.
The principal arctan branch is used throughout: for B < 0 the angle is
negative, which the odd-k selection absorbs.

A cubic with real coefficients, distinct roots, and c != 0 inherits the
formula through u_k = (a - s_k)/c, provided a and c are real (that is,
the discriminant is positive).

solve_numeric is the independent oracle: depressed-cubic closed form at
working precision, then one Newton polish per root, no trigonometry and
no shift data shared with the formulas it checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from .cubic import Cubic
from .errors import (NonConvergence, NonRealShift, NotAPermutation,
                     TranslationCase)
from .field import as_field
from .mobius import INFINITY, MobiusMap
from .precision import (PrecisionContext, cube_roots, is_complex_scalar,
                        is_numeric_scalar)
from .shift import RamanujanShift, Translation, classify_and_shift


@dataclass(frozen=True)
class TrigRoot:
    """One root of p_B in angle form: value = cos(angle) scaled per s_k."""

    k: int
    value: Any
    angle: Any


def _real_b(B, ctx: PrecisionContext):
    if not is_numeric_scalar(B):
        return as_field(B).embed(ctx)
    if is_complex_scalar(B):
        if B.imag != 0:
            raise NonRealShift("trig formulas need a real B")
        return B.real
    return B


def rsc_trig_roots(B, ctx: PrecisionContext) -> List[TrigRoot]:
    """The three (real) roots of p_B by the arctan formula, k ascending."""
    Bn = _real_b(B, ctx)
    if Bn == 0:
        phi3 = ctx.pi / 6
        ks = (2, 4, 6)
    else:
        phi3 = ctx.atan(3 * ctx.sqrt(ctx.real(3)) / Bn) / 3
        ks = (2, 4, 6) if Bn > 0 else (1, 3, 5)
    amp = ctx.sqrt(27 + Bn * Bn)
    base = (3 + Bn) / 2
    out = []
    for k in ks:
        angle = k * ctx.pi / 3 + phi3
        out.append(TrigRoot(k, (base + amp * ctx.cos(angle)) / 3, angle))
    return out


def cubic_trig_roots(f: Cubic, ctx: PrecisionContext) -> List[Any]:
    """Roots of a real cubic via its Ramanujan shift, in k order.

    Raises TranslationCase when c = 0 (take h plus the real cube root of
    -k instead) and NonRealShift when the shift data is not real, which
    for real coefficients means a negative discriminant.
    """
    shift = classify_and_shift(f, ctx)
    if isinstance(shift, Translation):
        raise TranslationCase(
            "cubic is a translation of x^3; no Ramanujan form exists")
    if not shift.is_real:
        raise NonRealShift("shift data is complex (negative discriminant)")
    a = shift.a if is_numeric_scalar(shift.a) else shift.a.embed(ctx)
    c = shift.c if is_numeric_scalar(shift.c) else shift.c.embed(ctx)
    return [(a - s.value) / c for s in rsc_trig_roots(shift.B, ctx)]


def solve_numeric(f: Cubic, ctx: PrecisionContext) -> List[Any]:
    """All three roots, closed form plus Newton polish, sorted (re, im).

    Repeated roots are allowed; their residuals still meet the tolerance
    because |f| vanishes to second order there.
    """
    g = f.embed(ctx)
    P, Q, R = (ctx.to_scalar(v) for v in (g.P, g.Q, g.R))
    third = ctx.real(1) / 3
    # depressed form: x = y - P/3, y^3 + p y + q
    p = Q - P * P * third
    q = 2 * P ** 3 / 27 - P * Q * third + R
    shift_back = -P * third
    scale = 1 + max(abs(P), abs(Q), abs(R))
    if abs(p) <= ctx.tolerance * scale ** 2 and abs(q) <= ctx.tolerance * scale ** 3:
        roots = [shift_back] * 3
    else:
        disc = (q / 2) ** 2 + (p / 3) ** 3
        sq = ctx.sqrt(ctx.to_scalar(disc) + 0j)
        cand = -q / 2 + sq
        if abs(cand) < abs(-q / 2 - sq):
            cand = -q / 2 - sq
        C = cube_roots(cand, ctx)[0]
        omega = ctx.omega
        roots = []
        for j in range(3):
            Cw = C * omega ** j
            y = Cw - p / (3 * Cw)
            roots.append(y + shift_back)
    # Newton polish at full precision
    polished = []
    for r in roots:
        x = ctx.to_scalar(r) + 0j
        for _ in range(8):
            fx = ((x + P) * x + Q) * x + R
            dfx = (3 * x + 2 * P) * x + Q
            if abs(dfx) == 0:
                break
            step = fx / dfx
            x = x - step
            if abs(step) <= ctx.tolerance * (1 + abs(x)):
                break
        if abs(x.imag) <= ctx.tolerance * (1 + abs(x)):
            x = ctx.complex(x.real, 0)
        polished.append(x)
    for r in polished:
        if abs(g.evaluate(r, ctx)) > ctx.tolerance * scale ** 3:
            raise NonConvergence(
                f"residual {ctx.nstr(abs(g.evaluate(r, ctx)), 5)} at root "
                f"{ctx.nstr(r, 8)}")
    polished.sort(key=lambda z: (z.real, z.imag))
    return polished


def permutation_under(m: MobiusMap, roots: Sequence[Any],
                      ctx: PrecisionContext) -> Tuple[int, ...]:
    """sigma with m(roots[i]) matching roots[sigma[i]], as an index tuple.

    Matching is exact for exact scalars and within a scaled tolerance for
    floating ones. Raises NotAPermutation when images fail to land on the
    root set bijectively (or when the roots are not distinct).
    """
    exact = not any(is_numeric_scalar(r) for r in roots) and m.is_exact
    if exact:
        work = list(roots)

        def same(x, y):
            return x is y if (x is INFINITY or y is INFINITY) else x == y
    else:
        work = [r if is_numeric_scalar(r) else r.embed(ctx)
                for r in (as_field(r) if isinstance(r, (int, Fraction)) else r
                          for r in roots)]
        m = m.embed(ctx)
        mag = max(1 + abs(r) for r in work)
        tol = ctx.tolerance * mag * mag

        def same(x, y):
            if x is INFINITY or y is INFINITY:
                return x is y
            return abs(x - y) <= tol
    for i in range(len(work)):
        for j in range(i + 1, len(work)):
            if same(work[i], work[j]):
                raise NotAPermutation("roots are not distinct")
    sigma = []
    for i, r in enumerate(work):
        img = m.apply(r, None if exact else ctx)
        hits = [j for j, s in enumerate(work) if same(img, s)]
        if len(hits) != 1:
            raise NotAPermutation(
                f"image of root {i} does not land on exactly one root")
        sigma.append(hits[0])
    if sorted(sigma) != list(range(len(roots))):
        raise NotAPermutation("images are not a bijection of the root set")
    return tuple(sigma)


def format_cycles(sigma: Sequence[int]) -> str:
    """Cycle notation like (0 1 2) or (0)(1 2), 0-indexed."""
    seen = set()
    parts = []
    for start in range(len(sigma)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = sigma[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = sigma[j]
        parts.append("(" + " ".join(str(i) for i in cyc) + ")")
    return "".join(parts)
