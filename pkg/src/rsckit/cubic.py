"""Monic cubics, their discriminants, and the Serret root-permuting map.

A monic cubic x^3 + P x^2 + Q x + R with distinct roots t1, t2, t3 always
admits a Moebius map of order three permuting the roots cyclically. With

    Delta = P^2 Q^2 - 4 Q^3 - 4 P^3 R + 18 P Q R - 27 R^2

(the discriminant) and a fixed square root of Delta, the map is
m(x) = (a x + b)/(c x + d) where

    a = (sqrt(Delta) - (9R - PQ)) / (2 sqrt(Delta))
    b = (2 Q^2 - 6 P R)          / (2 sqrt(Delta))
    c = (6 Q - 2 P^2)            / (2 sqrt(Delta))
    d = 1 - a

normalized so that a d - b c = 1. Negating the square root replaces
(a, b, c, d) by (d, -b, -c, a), the inverse cycle.

The distinguished family here is the one-parameter family of Ramanujan
simple cubics

    p_B(x) = x^3 - ((3 + B)/2) x^2 - ((3 - B)/2) x + 1,

whose roots are permuted by the coefficient-free map n(x) = 1/(1 - x) for
every B. Its discriminant is the perfect square ((27 + B^2)/4)^2, and the
family degenerates (triple root) exactly at B = +-sqrt(-27).

Scalars are either all exact (FieldElement) or all floating (mpf/mpc from
one PrecisionContext); the two kinds never mix inside one cubic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import FieldMismatch, RepeatedRoots, SqrtNotRepresentable
from .field import FieldElement, as_field, field_sqrt
from .precision import PrecisionContext, is_numeric_scalar, principal_sqrt


def _coerce_scalar(x):
    if isinstance(x, (int, Fraction)):
        return as_field(x)
    return x


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + P x^2 + Q x + R."""

    P: Any
    Q: Any
    R: Any

    def __post_init__(self):
        object.__setattr__(self, "P", _coerce_scalar(self.P))
        object.__setattr__(self, "Q", _coerce_scalar(self.Q))
        object.__setattr__(self, "R", _coerce_scalar(self.R))
        kinds = {is_numeric_scalar(v) for v in (self.P, self.Q, self.R)}
        if len(kinds) > 1:
            raise FieldMismatch("cubic mixes exact and floating coefficients")

    @property
    def is_exact(self) -> bool:
        return not is_numeric_scalar(self.P)

    def coefficients(self) -> tuple:
        """Ascending coefficient list (R, Q, P, 1)."""
        one = as_field(1) if self.is_exact else self.P * 0 + 1
        return (self.R, self.Q, self.P, one)

    def discriminant(self):
        P, Q, R = self.P, self.Q, self.R
        return (P * P * Q * Q - 4 * Q * Q * Q - 4 * P * P * P * R
                + 18 * P * Q * R - 27 * R * R)

    def evaluate(self, x, ctx: Optional[PrecisionContext] = None):
        """f(x), exact when both sides are exact, floating otherwise."""
        if self.is_exact and not is_numeric_scalar(x) and not isinstance(x, complex):
            x = as_field(x)
            return ((x + self.P) * x + self.Q) * x + self.R
        if ctx is None:
            raise ValueError("numeric evaluation needs a PrecisionContext")
        g = self.embed(ctx) if self.is_exact else self
        x = ctx.to_scalar(x)
        return ((x + g.P) * x + g.Q) * x + g.R

    def embed(self, ctx: PrecisionContext) -> "Cubic":
        """Floating copy of an exact cubic at ctx precision."""
        if not self.is_exact:
            return self
        return Cubic(self.P.embed(ctx), self.Q.embed(ctx), self.R.embed(ctx))

    def __str__(self) -> str:
        def term(c, suffix):
            s = str(c)
            if s == "0" or s == "0.0":
                return ""
            sign = " + "
            core = s
            # a leading minus only factors out of a one-term coefficient;
            # for sums like -1-sqrt(2) it binds to the first term alone
            if s.startswith("-") and not any(ch in s[1:] for ch in "+-"):
                sign = " - "
                core = s[1:]
            if suffix and any(ch in core for ch in "+-/ "):
                core = f"({core})"
            if suffix and core == "1":
                return f"{sign}{suffix[1:]}"
            return f"{sign}{core}{suffix}"

        out = "x^3"
        for c, suffix in ((self.P, "*x^2"), (self.Q, "*x"), (self.R, "")):
            out += term(c, suffix)
        return out


def rsc_from_b(B) -> Cubic:
    """The Ramanujan simple cubic p_B, for an exact or floating parameter."""
    B = _coerce_scalar(B)
    if is_numeric_scalar(B):
        half = B * 0 + Fraction(1, 2)
        return Cubic(-(3 + B) * half, -(3 - B) * half, B * 0 + 1)
    B = as_field(B)
    return Cubic(-(3 + B) / 2, -(3 - B) / 2, as_field(1))


def rsc_detect(f: Cubic):
    """B such that f == p_B exactly, or None.

    Membership is equivalent to R == 1 together with P + Q == -3, in which
    case B = -2P - 3.
    """
    one = 1 if f.is_exact else f.P * 0 + 1
    if f.R == one and f.P + f.Q == -3 * one:
        return -2 * f.P - 3
    return None


# capitalized alias matching the usual name of the parameter
rsc_from_B = rsc_from_b


def discriminant(f: Cubic):
    """Functional form of Cubic.discriminant."""
    return f.discriminant()


@dataclass(frozen=True)
class SerretData:
    """One branch of the root-permuting map data for a fixed cubic.

    Satisfies a*d - b*c == 1 and d == 1 - a. `flipped()` gives the data for
    the negated square root, which is the inverse permutation.
    """

    delta: Any
    sqrt_delta: Any
    a: Any
    b: Any
    c: Any
    d: Any

    def flipped(self) -> "SerretData":
        return SerretData(self.delta, -self.sqrt_delta,
                          self.d, -self.b, -self.c, self.a)


def serret_invariants(f: Cubic, ctx: PrecisionContext) -> SerretData:
    """Serret map data for a cubic with distinct roots.

    Exact cubics get an exact square root of the discriminant when one
    exists in a field of the supported shape (extending a rational cubic by
    one surd is fine, since sqrt(Delta) then has a square-free kernel);
    otherwise SqrtNotRepresentable is raised and the caller may retry with
    an embedded cubic. The principal square root branch is used either way,
    so the two possible data sets are deterministic: this one and flipped().
    """
    delta = f.discriminant()
    if f.is_exact:
        if delta.is_zero():
            raise RepeatedRoots("discriminant is exactly zero")
        sqrt_delta = field_sqrt(delta)
        if sqrt_delta is None:
            raise SqrtNotRepresentable(
                f"sqrt of discriminant {delta} needs a tower beyond two surds")
        try:
            two_sd = 2 * sqrt_delta
            a = (sqrt_delta - (9 * f.R - f.P * f.Q)) / two_sd
            b = (2 * f.Q * f.Q - 6 * f.P * f.R) / two_sd
            c = (6 * f.Q - 2 * f.P * f.P) / two_sd
        except Exception as exc:  # merging fields can overflow two surds
            raise SqrtNotRepresentable(str(exc)) from exc
        return SerretData(delta, sqrt_delta, a, b, c, 1 - a)
    scale = (1 + max(abs(f.P), abs(f.Q), abs(f.R))) ** 4
    if abs(delta) < ctx.tolerance * scale:
        raise RepeatedRoots("discriminant vanishes within tolerance")
    sqrt_delta = principal_sqrt(delta, ctx)
    two_sd = 2 * sqrt_delta
    a = (sqrt_delta - (9 * f.R - f.P * f.Q)) / two_sd
    b = (2 * f.Q * f.Q - 6 * f.P * f.R) / two_sd
    c = (6 * f.Q - 2 * f.P * f.P) / two_sd
    return SerretData(delta, sqrt_delta, a, b, c, 1 - a)
