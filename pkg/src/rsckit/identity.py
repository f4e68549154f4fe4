"""Cube-root-sum identities attached to the Ramanujan cubic family.

For any B away from the degenerate pair, the roots r1, r2, r3 of p_B
satisfy, with suitable cube-root branches,

    cbrt(r1) + cbrt(r2) + cbrt(r3)
        = cbrt( (3+B)/2 - 6 + 3 * cbrt((27+B^2)/4) ).

A general cubic with c != 0 inherits the identity through its shift: the
radicands become a - c*t_i, which are exactly the roots of p_B. The right
side is stored structurally as base + coeff * cbrt(inner) with

    base = (B-9)/2,  coeff = 3,  inner = (27+B^2)/4,

so scaling and exact rendering can work on the pieces. Multiplying every
left radicand by a positive scalar s multiplies both sides by cbrt(s) and
turns (base, coeff, inner) into (s*base, s*coeff, inner).

For real B everything is real: the three real cube roots work, matching
the fact that disc(p_B) = ((27+B^2)/4)^2 > 0 forces three real roots. For
complex data a deterministic lexicographic search over branch choices
realizes the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Any, List, Optional, Sequence, Tuple

from .cubic import Cubic, rsc_detect, rsc_from_b
from .errors import (FieldTooLarge, NoBranchFound, RepeatedRoots,
                     TranslationCase, VerificationFailed)
from .field import (FieldElement, as_field, field_sqrt, height_cap,
                    recognize)
from .precision import (PrecisionContext, cube_roots, is_complex_scalar,
                        is_numeric_scalar, real_cbrt)
from .roots import rsc_trig_roots, solve_numeric
from .shift import RamanujanShift, Translation, classify_and_shift

_RECOGNIZE_HEIGHT = 10_000
_ANGLE_DENOM_BOUND = 3600


@dataclass(frozen=True)
class CosForm:
    """Exact closed form base + coeff * cos(frac * pi), frac in [0, 1]."""

    base: FieldElement
    coeff: FieldElement
    frac: Fraction

    def value(self, ctx: PrecisionContext):
        return self.base.embed(ctx) + self.coeff.embed(ctx) * ctx.cospi_frac(self.frac)

    def _angle_text(self) -> str:
        n, d = self.frac.numerator, self.frac.denominator
        pi = "pi" if n == 1 else f"{n}*pi"
        return pi if d == 1 else f"{pi}/{d}"

    def text(self) -> str:
        c = str(self.coeff)
        if any(ch in c for ch in "+-") and not c.startswith("-"):
            c = f"({c})"
        elif c.startswith("-") and any(ch in c[1:] for ch in "+-"):
            c = f"({c})"
        cos = f"{c}*cos({self._angle_text()})" if c != "1" else f"cos({self._angle_text()})"
        if self.base.is_zero():
            return cos
        return f"{self.base}+{cos}" if not cos.startswith("-") else f"{self.base}{cos}"

    def latex(self) -> str:
        n, d = self.frac.numerator, self.frac.denominator
        pi = "\\pi" if n == 1 else f"{n}\\pi"
        ang = pi if d == 1 else f"\\frac{{{pi}}}{{{d}}}"
        c = self.coeff.latex()
        if any(ch in c for ch in "+-") and not c.startswith("-"):
            c = f"\\left({c}\\right)"
        cos = f"{c}\\cos {ang}" if c != "1" else f"\\cos {ang}"
        if self.base.is_zero():
            return cos
        return f"{self.base.latex()} + {cos}"


class Radicand:
    """One left-hand radicand: a numeric value plus optional exact forms.

    Equality prefers the exact form when both sides have one, then the
    cosine form, then bitwise numeric equality; the numeric value is a
    shadow of the exact data, not independent state.
    """

    __slots__ = ("value", "exact", "cos")

    def __init__(self, value, exact: Optional[FieldElement] = None,
                 cos: Optional[CosForm] = None):
        self.value = value
        self.exact = exact
        self.cos = cos

    def __eq__(self, other):
        if not isinstance(other, Radicand):
            return NotImplemented
        if (self.exact is None) != (other.exact is None):
            return False
        if (self.cos is None) != (other.cos is None):
            return False
        if self.exact is not None:
            if self.exact != other.exact:
                return False
            return self.cos == other.cos
        if self.cos is not None:
            return self.cos == other.cos
        return self.value == other.value

    def __repr__(self):
        return f"Radicand({self.text()})"

    def text(self, digits: int = 12) -> str:
        if self.exact is not None:
            return str(self.exact)
        if self.cos is not None:
            return self.cos.text()
        import mpmath
        return mpmath.nstr(self.value, digits)

    def latex(self, digits: int = 12) -> str:
        if self.exact is not None:
            return self.exact.latex()
        if self.cos is not None:
            return self.cos.latex()
        import mpmath
        return mpmath.nstr(self.value, digits)


@dataclass(frozen=True)
class BranchChoice:
    """Cube-root branch indices into the cube_roots ordering."""

    lhs: Tuple[int, int, int]
    rhs_inner: int
    rhs_outer: int


@dataclass(frozen=True, eq=False)
class IdentityRecord:
    source: Cubic
    B: Any
    a: Any
    c: Any
    lhs: Tuple[Radicand, Radicand, Radicand]
    rhs_base: Any
    rhs_coeff: Any
    rhs_inner: Any
    branches: BranchChoice
    residual: Any
    precision_bits: int
    shift: Optional[RamanujanShift] = dc_field(default=None, repr=False)

    @property
    def residual_log2(self) -> Optional[float]:
        if self.residual == 0:
            return None
        import mpmath
        return float(mpmath.log(abs(self.residual), 2))

    def __eq__(self, other):
        if not isinstance(other, IdentityRecord):
            return NotImplemented
        return (self.source == other.source
                and _scalar_eq(self.B, other.B)
                and _scalar_eq(self.a, other.a)
                and _scalar_eq(self.c, other.c)
                and self.lhs == other.lhs
                and _scalar_eq(self.rhs_base, other.rhs_base)
                and _scalar_eq(self.rhs_coeff, other.rhs_coeff)
                and _scalar_eq(self.rhs_inner, other.rhs_inner)
                and self.branches == other.branches
                and self.precision_bits == other.precision_bits)

    def scaled(self, s, ctx: PrecisionContext) -> "IdentityRecord":
        """Record for the identity with every left radicand multiplied by s.

        s must be a positive real scalar; both sides pick up cbrt(s), so
        the branch choice survives and the residual rescales.
        """
        s_exact = None
        if isinstance(s, (int, Fraction)):
            s_exact = as_field(s)
        elif isinstance(s, FieldElement):
            s_exact = s
        if s_exact is not None:
            if s_exact.sign() <= 0:
                raise ValueError("scale must be positive")
            sn = s_exact.embed(ctx)
        else:
            if not (is_numeric_scalar(s) and not is_complex_scalar(s) and s > 0):
                raise ValueError("scale must be positive real")
            sn = s
        new_lhs = []
        for r in self.lhs:
            exact = None
            cos = None
            if s_exact is not None and r.exact is not None:
                exact = s_exact * r.exact
            if s_exact is not None and r.cos is not None:
                cos = CosForm(s_exact * r.cos.base, s_exact * r.cos.coeff,
                              r.cos.frac)
            new_lhs.append(Radicand(sn * r.value, exact, cos))

        def scale_scalar(x):
            if x is None:
                return None
            if s_exact is not None and not is_numeric_scalar(x):
                return s_exact * x
            return sn * (x if is_numeric_scalar(x) else x.embed(ctx))

        base = scale_scalar(self.rhs_base)
        coeff = scale_scalar(self.rhs_coeff)
        lhs_sum = sum(cube_roots(r.value, ctx)[i]
                      for r, i in zip(new_lhs, self.branches.lhs))
        bn = base if is_numeric_scalar(base) else base.embed(ctx)
        cn = coeff if is_numeric_scalar(coeff) else coeff.embed(ctx)
        wn = (self.rhs_inner if is_numeric_scalar(self.rhs_inner)
              else self.rhs_inner.embed(ctx))
        rhs_val = bn + cn * cube_roots(wn, ctx)[self.branches.rhs_inner]
        rhs = cube_roots(rhs_val, ctx)[self.branches.rhs_outer]
        residual = abs(lhs_sum - rhs)
        return IdentityRecord(self.source, self.B, self.a, self.c,
                              tuple(new_lhs), base, coeff, self.rhs_inner,
                              self.branches, residual, self.precision_bits,
                              self.shift)


def _scalar_eq(x, y) -> bool:
    if x is None or y is None:
        return x is None and y is None
    if is_numeric_scalar(x) != is_numeric_scalar(y):
        return False
    return x == y


def _gens_of(*vals) -> Tuple[int, ...]:
    seen = []
    for v in vals:
        if isinstance(v, FieldElement):
            for g in v.gens:
                if g not in seen:
                    seen.append(g)
    return tuple(sorted(seen))


def _angle_fraction(phi3, ctx: PrecisionContext) -> Optional[Fraction]:
    """phi3/pi as an exact small-denominator fraction, or None."""
    ratio = phi3 / ctx.pi
    frac = Fraction(float(ratio)).limit_denominator(_ANGLE_DENOM_BOUND)
    if abs(ratio - ctx.real(frac)) <= ctx.tolerance * 16:
        return frac
    return None


def _canonical_angle(frac: Fraction) -> Fraction:
    """Reduce to [0, 1] using cos's period and evenness."""
    frac = frac % 2
    if frac > 1:
        frac = 2 - frac
    return frac


def _attach_cos_forms(B, values: Sequence[Any], ks: Sequence[int],
                      ctx: PrecisionContext) -> List[Optional[CosForm]]:
    """Closed cosine forms for trig radicands of an exact real B, if the
    arctan angle is an exact rational multiple of pi."""
    none: List[Optional[CosForm]] = [None] * len(values)
    amp2 = 27 + B * B
    amp = field_sqrt(amp2)
    if amp is None:
        return none
    Bn = B.embed(ctx)
    if Bn == 0:
        phi3 = ctx.pi / 6
    else:
        phi3 = ctx.atan(3 * ctx.sqrt(ctx.real(3)) / Bn) / 3
    frac0 = _angle_fraction(phi3, ctx)
    if frac0 is None:
        return none
    base = (3 + B) / 6
    coeff = amp / 3
    out = []
    for k, v in zip(ks, values):
        frac = _canonical_angle(Fraction(k, 3) + frac0)
        form = CosForm(base, coeff, frac)
        if abs(form.value(ctx) - v) > ctx.tolerance * (1 + abs(v)) * 16:
            return none
        out.append(form)
    return out


def build_identity(f: Cubic, ctx: PrecisionContext,
                   lhs_cos: Optional[Sequence[CosForm]] = None
                   ) -> IdentityRecord:
    """The cube-root-sum identity carried by f, with verified branches.

    f must have distinct roots and c != 0 (an RSC input is used directly;
    anything else goes through its shift). The left radicands are the
    roots of p_B: trig values in k order for real B, the numeric solver's
    sorted roots otherwise. Branch search order is documented: the all-real
    choice first for real data, then lexicographic over (lhs1, lhs2, lhs3,
    rhs_inner) with rhs_outer resolved by best match; first success wins.

    lhs_cos optionally supplies exact cosine forms for the radicands (the
    caller knows them, e.g. from minimal-polynomial work); they are matched
    to the computed values and verified before being attached.
    """
    B = rsc_detect(f)
    shift = None
    a = c = None
    if B is None:
        shift = classify_and_shift(f, ctx)
        if isinstance(shift, Translation):
            raise TranslationCase(
                "cubic is a translation of x^3; it has no Ramanujan form")
        a, c, B = shift.a, shift.c, shift.B
    exact = not is_numeric_scalar(B)
    amp2 = 27 + B * B
    if exact:
        if amp2.is_zero():
            raise RepeatedRoots("degenerate family member (B^2 = -27)")
        Bn = B.embed(ctx)
        real_B = True
    else:
        scale = (1 + abs(B)) ** 2
        if abs(amp2) <= ctx.tolerance * scale:
            raise RepeatedRoots("degenerate family member (B^2 = -27)")
        Bn = B
        real_B = not is_complex_scalar(B) or B.imag == 0
        if real_B and is_complex_scalar(B):
            Bn = B.real

    if real_B:
        trig = rsc_trig_roots(Bn, ctx)
        values = [t.value for t in trig]
        ks = [t.k for t in trig]
    else:
        values = solve_numeric(rsc_from_b(Bn), ctx)
        ks = []

    exact_forms: List[Optional[FieldElement]] = [None] * 3
    cos_forms: List[Optional[CosForm]] = [None] * 3
    if exact:
        gens = _gens_of(B, a, c)
        # the two-surd candidate table grows quadratically in the height,
        # so recognition over a biquadratic field uses a modest bound;
        # radicands that really live in such a field are small anyway
        height = _RECOGNIZE_HEIGHT if len(gens) < 2 else 64
        height = min(height, height_cap(gens))
        for i, v in enumerate(values):
            try:
                exact_forms[i] = recognize(v, gens, height, ctx)
            except FieldTooLarge:
                break
        cos_forms = _attach_cos_forms(B, values, ks, ctx)
    if lhs_cos is not None:
        matched: List[Optional[CosForm]] = [None] * len(values)
        remaining = list(lhs_cos)
        for i, v in enumerate(values):
            hit = None
            for form in remaining:
                if abs(form.value(ctx) - v) <= ctx.tolerance * (1 + abs(v)) * 16:
                    hit = form
                    break
            if hit is None:
                raise VerificationFailed(
                    "supplied cosine form matches no computed radicand")
            remaining.remove(hit)
            matched[i] = hit
        cos_forms = matched

    u = (B - 9) / 2
    v_coeff = as_field(3) if exact else ctx.real(3)
    w = amp2 / 4
    un = u if is_numeric_scalar(u) else u.embed(ctx)
    wn = w if is_numeric_scalar(w) else w.embed(ctx)
    vn = ctx.real(3)

    tol = ctx.tolerance * (1 + max(abs(x) for x in values)) * 16
    choice = None
    residual = None
    if real_B:
        idxs = tuple(0 if x >= 0 else 1 for x in values)
        lhs_sum = sum(real_cbrt(x, ctx) for x in values)
        rhs_val = un + vn * real_cbrt(wn, ctx)
        outer = 0 if rhs_val >= 0 else 1
        r = abs(lhs_sum - real_cbrt(rhs_val, ctx))
        if r <= tol:
            choice = BranchChoice(idxs, 0 if wn >= 0 else 1, outer)
            residual = r
    if choice is None:
        lhs_cubes = [cube_roots(x, ctx) for x in values]
        inner_roots = cube_roots(wn, ctx)
        for i1, i2, i3 in product(range(3), repeat=3):
            lhs_sum = lhs_cubes[0][i1] + lhs_cubes[1][i2] + lhs_cubes[2][i3]
            for inner in range(3):
                rhs_val = un + vn * inner_roots[inner]
                outers = cube_roots(rhs_val, ctx)
                diffs = [abs(lhs_sum - o) for o in outers]
                best = min(range(3), key=lambda j: diffs[j])
                if diffs[best] <= tol:
                    choice = BranchChoice((i1, i2, i3), inner, best)
                    residual = diffs[best]
                    break
            if choice is not None:
                break
    if choice is None:
        raise NoBranchFound(
            "no cube-root branch combination meets the tolerance")

    lhs = tuple(Radicand(v, e, cf)
                for v, e, cf in zip(values, exact_forms, cos_forms))
    return IdentityRecord(f, B, a, c, lhs, u, v_coeff, w, choice, residual,
                          ctx.bits, shift)


def verify_value_is_root(expr_value, f: Cubic, ctx: PrecisionContext):
    """|f(expr_value)| scaled by max(1, largest coefficient magnitude)."""
    g = f.embed(ctx)
    norm = max(abs(g.P), abs(g.Q), abs(g.R))
    if norm < 1:
        norm = ctx.real(1)
    return abs(g.evaluate(ctx.to_scalar(expr_value), ctx)) / norm


def _cube_split_int(n: int) -> Tuple[int, int]:
    """n = m^3 * k with k cube-free (k keeps any unfactored tail)."""
    if n == 0:
        return 0, 1
    sign = -1 if n < 0 else 1
    n = abs(n)
    m, k, p = 1, 1, 2
    while p * p * p <= n and p < 100_000:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        m *= p ** (e // 3)
        k *= p ** (e % 3)
        p += 1 if p == 2 else 2
    return sign * m, k * n


def _cube_split(q: Fraction) -> Tuple[Fraction, Fraction]:
    """q = m^3 * k with k cube-free."""
    mn, kn = _cube_split_int(q.numerator)
    md, kd = _cube_split_int(q.denominator)
    return Fraction(mn, md), Fraction(kn, kd)


def _scalar_text(x, digits: int = 12) -> str:
    import mpmath
    if isinstance(x, FieldElement):
        return str(x)
    if is_complex_scalar(x):
        return f"({mpmath.nstr(x.real, digits)} {'+' if x.imag >= 0 else '-'} {mpmath.nstr(abs(x.imag), digits)}i)"
    return mpmath.nstr(x, digits)


def _wrap_pow(s: str) -> str:
    bare = s.lstrip("-")
    if bare.isdigit() and not s.startswith("-"):
        return f"{s}^(1/3)"
    return f"({s})^(1/3)"


def _rhs_parts(rec: IdentityRecord):
    """Display structure for the right radicand, folding where exact.

    Returns (kind, payload): "scalar" when the whole radicand collapses to
    one exact scalar; "folded" as (base, m, k) meaning base + m*cbrt(k)
    with m, k rational and k cube-free (from K = coeff^3 * inner); "raw"
    as (base, coeff, inner) otherwise.
    """
    base, coeff, inner = rec.rhs_base, rec.rhs_coeff, rec.rhs_inner
    if (isinstance(base, FieldElement) and isinstance(coeff, FieldElement)
            and isinstance(inner, FieldElement)):
        K = coeff ** 3 * inner
        if K.is_rational:
            m, k = _cube_split(K.as_rational())
            if k == 1:
                return ("scalar", base + as_field(m))
            return ("folded", (base, as_field(m), as_field(k)))
    return ("raw", (base, coeff, inner))


def render(rec: IdentityRecord, fmt: str = "text",
           scale=None, ctx: Optional[PrecisionContext] = None) -> str:
    """Render an identity record as text, latex, or schema-v1 json.

    scale, if given, renders the scaled presentation (every left radicand
    multiplied by scale, both sides by its cube root) without changing the
    canonical record.
    """
    if scale is not None:
        if ctx is None:
            ctx = PrecisionContext(bits=rec.precision_bits)
        rec = rec.scaled(scale, ctx)
    if fmt == "text":
        lhs = " + ".join(_wrap_pow(r.text()) for r in rec.lhs)
        kind, payload = _rhs_parts(rec)
        if kind == "scalar":
            rhs = _wrap_pow(str(payload))
        elif kind == "folded":
            base, m, k = payload
            inner = _wrap_pow(str(k))
            if m != as_field(1):
                ms = str(m)
                if "/" in ms or ms.startswith("-"):
                    ms = f"({ms})"
                inner = f"{ms}*{inner}"
            body = inner if base.is_zero() else f"{base} + {inner}"
            rhs = f"({body})^(1/3)"
        else:
            base, coeff, inner = payload
            inner_txt = _wrap_pow(_scalar_text(inner))
            base_txt = _scalar_text(base)
            coeff_txt = _scalar_text(coeff)
            rhs = f"({base_txt} + {coeff_txt}*{inner_txt})^(1/3)"
        return f"{lhs} = {rhs}"
    if fmt == "latex":
        lhs = " + ".join(f"\\sqrt[3]{{{r.latex()}}}" for r in rec.lhs)
        kind, payload = _rhs_parts(rec)
        if kind == "scalar":
            rhs = f"\\sqrt[3]{{{payload.latex()}}}"
        elif kind == "folded":
            base, m, k = payload
            inner = f"\\sqrt[3]{{{k.latex()}}}"
            if m != as_field(1):
                inner = f"{m.latex()}{inner}"
            body = inner if base.is_zero() else f"{base.latex()} + {inner}"
            rhs = f"\\sqrt[3]{{{body}}}"
        else:
            base, coeff, inner = payload
            bl = base.latex() if isinstance(base, FieldElement) else _scalar_text(base)
            cl = coeff.latex() if isinstance(coeff, FieldElement) else _scalar_text(coeff)
            il = inner.latex() if isinstance(inner, FieldElement) else _scalar_text(inner)
            rhs = f"\\sqrt[3]{{{bl} + {cl}\\sqrt[3]{{{il}}}}}"
        return f"{lhs} = {rhs}"
    if fmt == "json":
        return json.dumps(to_json_dict(rec), separators=(", ", ": "))
    raise ValueError(f"unknown format {fmt!r}")


def _scalar_json(x, bits: int):
    import mpmath
    if x is None:
        return None
    if isinstance(x, FieldElement):
        return str(x)
    digits = int(bits * 0.30103) + 5
    if is_complex_scalar(x):
        return {"re": mpmath.nstr(x.real, digits),
                "im": mpmath.nstr(x.imag, digits)}
    return mpmath.nstr(x, digits)


def to_json_dict(rec: IdentityRecord) -> dict:
    bits = rec.precision_bits
    terms = []
    cos_list = []
    any_cos = False
    for r in rec.lhs:
        if r.exact is not None:
            terms.append(str(r.exact))
        else:
            terms.append(_scalar_json(r.value, bits))
        if r.cos is not None:
            any_cos = True
            cos_list.append({"base": str(r.cos.base), "coeff": str(r.cos.coeff),
                             "num": r.cos.frac.numerator,
                             "den": r.cos.frac.denominator})
        else:
            cos_list.append(None)
    out = {
        "schema": 1,
        "source": {"P": _scalar_json(rec.source.P, bits),
                   "Q": _scalar_json(rec.source.Q, bits),
                   "R": _scalar_json(rec.source.R, bits)},
        "B": _scalar_json(rec.B, bits),
        "a": _scalar_json(rec.a, bits),
        "c": _scalar_json(rec.c, bits),
        "lhs_terms": terms,
        "rhs_radicand": {"base": _scalar_json(rec.rhs_base, bits),
                         "coeff": _scalar_json(rec.rhs_coeff, bits),
                         "inner": _scalar_json(rec.rhs_inner, bits)},
        "branches": {"lhs": list(rec.branches.lhs),
                     "rhs_inner": rec.branches.rhs_inner,
                     "rhs_outer": rec.branches.rhs_outer},
        "residual_log2": rec.residual_log2,
        "precision_bits": bits,
    }
    if any_cos:
        out["lhs_cos"] = cos_list
    return out


def _scalar_from_json(obj, ctx: PrecisionContext):
    from .parsing import parse_coeff
    if obj is None:
        return None
    if isinstance(obj, dict):
        return ctx.complex(ctx.real(obj["re"]), ctx.real(obj["im"]))
    s = str(obj)
    if any(ch in s for ch in ".eE") and "sqrt" not in s:
        return ctx.real(s)
    return parse_coeff(s)


def from_json(text: str, ctx: Optional[PrecisionContext] = None
              ) -> IdentityRecord:
    """Rebuild a record from its schema-v1 JSON (inverse of render json)."""
    data = json.loads(text)
    if data.get("schema") != 1:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    bits = int(data["precision_bits"])
    if ctx is None or ctx.bits != bits:
        ctx = PrecisionContext(bits=bits)
    src = data["source"]
    source = Cubic(*(_scalar_from_json(src[k], ctx) for k in ("P", "Q", "R")))
    B = _scalar_from_json(data["B"], ctx)
    a = _scalar_from_json(data["a"], ctx)
    c = _scalar_from_json(data["c"], ctx)
    cos_raw = data.get("lhs_cos") or [None, None, None]
    lhs = []
    for term, cos_obj in zip(data["lhs_terms"], cos_raw):
        val = _scalar_from_json(term, ctx)
        if isinstance(val, FieldElement):
            exact, value = val, val.embed(ctx)
        else:
            exact, value = None, val
        cos = None
        if cos_obj is not None:
            from .parsing import parse_coeff
            cos = CosForm(parse_coeff(cos_obj["base"]),
                          parse_coeff(cos_obj["coeff"]),
                          Fraction(int(cos_obj["num"]), int(cos_obj["den"])))
        lhs.append(Radicand(value, exact, cos))
    rhs = data["rhs_radicand"]
    branches = BranchChoice(tuple(int(i) for i in data["branches"]["lhs"]),
                            int(data["branches"]["rhs_inner"]),
                            int(data["branches"]["rhs_outer"]))
    rl2 = data["residual_log2"]
    residual = ctx.real(0) if rl2 is None else ctx.real(2) ** ctx.real(rl2)
    return IdentityRecord(source, B, a, c, tuple(lhs),
                          _scalar_from_json(rhs["base"], ctx),
                          _scalar_from_json(rhs["coeff"], ctx),
                          _scalar_from_json(rhs["inner"], ctx),
                          branches, residual, bits, None)
