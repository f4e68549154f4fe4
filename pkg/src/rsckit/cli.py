"""Command line front end.

Subcommands map one-to-one onto the library: transform (classify a cubic
and shift it onto the Ramanujan family), roots (trigonometric or numeric),
identity (build and render a cube-root identity), cosmin (minimal
polynomial of 2cos(2pi/n)), pipeline (the full cosine chain for one n),
mine (batch pipelines over a range), and verify-paper (the named fixture
suite).

Cubics are entered as four comma-separated coefficient expressions
"1,P,Q,R" over integers, rationals, and sqrt(square-free integer); the
leading coefficient must be exactly 1.  Exit codes: 0 success, 1 domain
errors (bad input values, unsupported cases, failed verification), 2 usage
errors.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .coslattice import (CosMinPoly, cos_min_poly, cos_pipeline, mine,
                         primitive_ks)
from .cubic import Cubic, rsc_from_b
from .errors import ParseError, RsckitError
from .field import FieldElement, as_field
from .fixtures import run_all
from .identity import (_scalar_json, _scalar_text, build_identity, render,
                       verify_value_is_root)
from .parsing import parse_coeff
from .precision import PrecisionContext, is_numeric_scalar
from .roots import (cubic_trig_roots, format_cycles, rsc_trig_roots,
                    solve_numeric)
from .shift import RamanujanShift, Translation, classify_and_shift, verify_shift


class UsageError(Exception):
    """Flag combination the parser cannot catch on its own."""


def _dumps(payload) -> str:
    return json.dumps(payload, separators=(", ", ": "))


def _parse_cubic(text: str) -> Cubic:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ParseError(
            "expected four comma-separated coefficients: 1,P,Q,R")
    lead = parse_coeff(parts[0])
    if lead != as_field(1):
        raise ParseError("leading coefficient must be exactly 1")
    p, q, r = (parse_coeff(part) for part in parts[1:])
    return Cubic(p, q, r)


def _latex_scalar(x) -> str:
    if isinstance(x, FieldElement):
        return x.latex()
    return _scalar_text(x)


def _log2_or_none(value: Optional[float]) -> Optional[float]:
    if value is None or value == float("-inf"):
        return None
    return value


def _residual_word(value: Optional[float]) -> str:
    v = _log2_or_none(value)
    return "exact" if v is None else f"residual 2^{v:.1f}"


def _cmd_transform(args, ctx: PrecisionContext) -> int:
    f = _parse_cubic(args.cubic)
    result = classify_and_shift(f, ctx)
    ok = verify_shift(f, result, ctx)
    bits = ctx.bits
    if isinstance(result, Translation):
        if args.format == "json":
            print(_dumps({"case": "translation",
                          "h": _scalar_json(result.h, bits),
                          "k": _scalar_json(result.k, bits),
                          "verified": ok}))
        elif args.format == "latex":
            print(f"f(x) = \\left(x - {_latex_scalar(result.h)}\\right)^3 "
                  f"+ {_latex_scalar(result.k)}")
        else:
            print("translation of x^3: f(x) = (x - h)^3 + k")
            print(f"h = {_scalar_text(result.h)}")
            print(f"k = {_scalar_text(result.k)}")
            print(f"verified: {str(ok).lower()}")
        return 0
    if args.format == "json":
        print(_dumps({"case": "ramanujan",
                      "B": _scalar_json(result.B, bits),
                      "a": _scalar_json(result.a, bits),
                      "c": _scalar_json(result.c, bits),
                      "rsc": {"P": _scalar_json(result.rsc.P, bits),
                              "Q": _scalar_json(result.rsc.Q, bits),
                              "R": _scalar_json(result.rsc.R, bits)},
                      "verified": ok}))
    elif args.format == "latex":
        print(f"B = {_latex_scalar(result.B)},\\quad "
              f"a = {_latex_scalar(result.a)},\\quad "
              f"c = {_latex_scalar(result.c)}")
    else:
        print(f"B = {_scalar_text(result.B)}")
        print(f"a = {_scalar_text(result.a)}")
        print(f"c = {_scalar_text(result.c)}")
        print(f"p_B: {result.rsc}")
        print(f"verified: {str(ok).lower()}")
    return 0


def _cmd_roots(args, ctx: PrecisionContext) -> int:
    bits = ctx.bits
    if args.B is not None:
        b = parse_coeff(args.B)
        f = rsc_from_b(b)
        roots = rsc_trig_roots(b, ctx)
        if args.format == "json":
            print(_dumps({
                "B": _scalar_json(b, bits),
                "method": "trig",
                "roots": [{"k": r.k,
                           "value": _scalar_json(r.value, bits),
                           "angle": _scalar_json(r.angle, bits)}
                          for r in roots]}))
        else:
            for r in roots:
                res = verify_value_is_root(r.value, f, ctx)
                print(f"s_{r.k} = {_scalar_text(r.value)}   "
                      f"{_residual_word(ctx.log2_abs(res))}")
        return 0
    f = _parse_cubic(args.cubic)
    if args.method == "trig":
        values = cubic_trig_roots(f, ctx)
    else:
        values = solve_numeric(f, ctx)
    if args.format == "json":
        print(_dumps({"method": args.method,
                      "roots": [_scalar_json(v, bits) for v in values]}))
    else:
        for v in values:
            res = verify_value_is_root(v, f, ctx)
            print(f"{_scalar_text(v)}   {_residual_word(ctx.log2_abs(res))}")
    return 0


def _cmd_identity(args, ctx: PrecisionContext) -> int:
    if args.B is not None:
        f = rsc_from_b(parse_coeff(args.B))
    else:
        f = _parse_cubic(args.cubic)
    rec = build_identity(f, ctx)
    scale = parse_coeff(args.scale) if args.scale is not None else None
    print(render(rec, args.format, scale=scale, ctx=ctx))
    return 0


def _poly_latex(coeffs: Sequence[int]) -> str:
    parts = []
    for m in range(len(coeffs) - 1, -1, -1):
        c = coeffs[m]
        if c == 0:
            continue
        mono = "" if m == 0 else ("x" if m == 1 else f"x^{{{m}}}")
        if not parts:
            head = "" if c == 1 and m > 0 else ("-" if c == -1 and m > 0
                                                else str(c))
            parts.append(head + mono)
            continue
        sign = " - " if c < 0 else " + "
        c = abs(c)
        body = mono if c == 1 and m > 0 else f"{c}{mono}"
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def _cmd_cosmin(args, ctx: PrecisionContext) -> int:
    p = cos_min_poly(args.n, ctx)
    if args.format == "json":
        print(_dumps({"n": p.n, "degree": p.degree,
                      "coeffs": list(p.coeffs)}))
    elif args.format == "latex":
        print(_poly_latex(p.coeffs))
    else:
        print(p)
    return 0


def _relation_json(rel) -> dict:
    return {"terms": [{"num": frac.numerator, "den": frac.denominator,
                       "coeff": str(coeff)} for frac, coeff in rel.terms],
            "const": str(rel.const)}


def _cmd_pipeline(args, ctx: PrecisionContext) -> int:
    res = cos_pipeline(args.n, args.k, ctx, height=args.height)
    factor = res.factor
    sh = res.shift
    rec = res.identity
    bits = ctx.bits
    if args.format == "json":
        print(_dumps({
            "n": res.n,
            "target_k": res.target_k,
            "d": factor.d,
            "exact": factor.exact,
            "factor_coeffs": {"P": _scalar_json(factor.cubic.P, bits),
                              "Q": _scalar_json(factor.cubic.Q, bits),
                              "R": _scalar_json(factor.cubic.R, bits)},
            "root_indices": list(factor.root_indices),
            "shift": {"a": _scalar_json(sh.a, bits),
                      "c": _scalar_json(sh.c, bits),
                      "B": _scalar_json(sh.B, bits)},
            "sigma": list(res.sigma),
            "relations": [_relation_json(rel) for rel in res.relations],
            "identity": json.loads(render(rec, "json")),
        }))
        return 0
    if args.format == "latex":
        print(render(rec, "latex"))
        return 0
    print(f"minimal polynomial (n = {res.n}): {cos_min_poly(res.n, ctx)}")
    field = "Q" if factor.d == 0 else f"Q(sqrt({factor.d}))"
    tag = "exact" if factor.exact else "numeric grouping"
    print(f"factor over {field} ({tag}): {factor.cubic}")
    print(f"cosine indices k = {factor.root_indices}")
    print(f"shift: a = {_scalar_text(sh.a)}, c = {_scalar_text(sh.c)}, "
          f"B = {_scalar_text(sh.B)}")
    print(f"identity: {render(rec, 'text')}")
    print(f"identity {_residual_word(rec.residual_log2)}")
    print(f"root cycle under 1/(1-x): {format_cycles(res.sigma)}")
    for rel in res.relations:
        print(f"relation: {rel.text()}")
    return 0


def _mine_entry_json(entry, bits: int) -> dict:
    out = {"n": entry.n, "target_k": entry.target_k}
    if entry.error is not None:
        out["error"] = entry.error
        return out
    res = entry.result
    out["d"] = res.factor.d
    out["exact"] = res.factor.exact
    out["root_indices"] = list(res.factor.root_indices)
    out["B"] = _scalar_json(res.identity.B, bits)
    out["residual_log2"] = _log2_or_none(res.identity.residual_log2)
    if entry.near_misses:
        out["near_misses"] = list(entry.near_misses)
    return out


def _cmd_mine(args, ctx: PrecisionContext) -> int:
    if args.end < args.start:
        raise UsageError("--end must be at least --start")
    entries = mine(range(args.start, args.end + 1), ctx,
                   height=args.height, near_miss=args.near_miss)
    if args.format == "json":
        print(_dumps([_mine_entry_json(e, ctx.bits) for e in entries]))
        return 0
    for e in entries:
        if e.error is not None:
            print(f"n={e.n} k={e.target_k} error: {e.error}")
            continue
        res = e.result
        b = res.identity.B
        b_txt = (_scalar_text(b) if not is_numeric_scalar(b)
                 else "~" + ctx.nstr(b, 20))
        tag = "" if res.factor.exact else " (numeric grouping)"
        print(f"n={e.n} k={e.target_k} roots={res.factor.root_indices} "
              f"d={res.factor.d} B={b_txt} "
              f"{_residual_word(res.identity.residual_log2)}{tag}")
        for note in e.near_misses:
            print(f"  near miss: {note}")
    return 0


def _cmd_verify_paper(args, ctx: PrecisionContext) -> int:
    results = run_all(ctx)
    if args.format == "json":
        print(_dumps({
            "fixtures": [{
                "name": r.name,
                "description": r.description,
                "ok": r.ok,
                "worst_residual_log2": _log2_or_none(r.worst_log2),
                "checks": [{"label": c.label, "ok": c.ok,
                            "residual_log2": _log2_or_none(c.residual_log2)}
                           for c in r.checks],
            } for r in results],
            "passed": sum(r.ok for r in results),
            "total": len(results),
        }))
        return 0 if all(r.ok for r in results) else 1
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        print(f"{mark} {r.name:18s} {_residual_word(r.worst_log2)}")
        print(f"     {r.description}")
        if not r.ok:
            for c in r.checks:
                if not c.ok:
                    print(f"     failed: {c.label}")
    passed = sum(r.ok for r in results)
    print(f"{passed} of {len(results)} fixtures passed")
    return 0 if passed == len(results) else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=256, metavar="BITS",
                        help="working precision in bits (default 256)")
    common.add_argument("--format", choices=("text", "json", "latex"),
                        default="text", help="output format (default text)")

    parser = argparse.ArgumentParser(
        prog="rsckit",
        description="Linear shifts of cubics onto Ramanujan simple cubics, "
                    "trigonometric roots, and cube-root identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common],
                       help="classify a cubic and shift it onto p_B")
    p.add_argument("--cubic", required=True, metavar="1,P,Q,R",
                   help="monic coefficients, e.g. \"1,0,-3,1\"")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("roots", parents=[common],
                       help="roots of a cubic or of p_B")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cubic", metavar="1,P,Q,R")
    group.add_argument("--B", metavar="EXPR",
                       help="parameter of the Ramanujan simple cubic p_B")
    p.add_argument("--method", choices=("trig", "numeric"), default="trig",
                   help="trigonometric formulas (real case) or numeric "
                        "solving (default trig; ignored with --B)")
    p.set_defaults(handler=_cmd_roots)

    p = sub.add_parser("identity", parents=[common],
                       help="build the cube-root identity of a cubic")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cubic", metavar="1,P,Q,R")
    group.add_argument("--B", metavar="EXPR")
    p.add_argument("--scale", metavar="EXPR",
                   help="positive factor applied to every left radicand "
                        "(both sides pick up its cube root)")
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser("cosmin", parents=[common],
                       help="minimal polynomial of 2cos(2pi/n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_cosmin)

    p = sub.add_parser("pipeline", parents=[common],
                       help="minimal polynomial -> factor -> shift -> "
                            "identity for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1,
                   help="cosine index: the run targets 2cos(2pi k/n) "
                        "(default 1)")
    p.add_argument("--height", type=int, default=10 ** 6,
                   help="recognition height bound (default 10^6)")
    p.set_defaults(handler=_cmd_pipeline)

    p = sub.add_parser("mine", parents=[common],
                       help="run the pipeline over a range of n")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--end", type=int, required=True)
    p.add_argument("--height", type=int, default=10 ** 6)
    p.add_argument("--near-miss", action="store_true",
                   help="flag radicands suspiciously close to small "
                        "rationals")
    p.set_defaults(handler=_cmd_mine)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="run the named regression fixtures")
    p.set_defaults(handler=_cmd_verify_paper)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.precision < 64:
        parser.error("--precision must be at least 64 bits")
    if args.format == "latex" and args.command in ("roots", "mine",
                                                   "verify-paper"):
        parser.error(f"--format latex is not supported for {args.command}")
    ctx = PrecisionContext(bits=args.precision)
    try:
        return args.handler(args, ctx)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RsckitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
