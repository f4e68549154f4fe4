"""Moebius maps x -> (a x + b)/(c x + d) on exact or floating scalars.

Maps act on the projective line: the pole -d/c goes to INFINITY and
INFINITY goes to a/c. Composition multiplies the underlying 2x2 matrices,
so a map is the identity permutation exactly when its matrix is a nonzero
scalar multiple of the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import DivisionByZero, FieldMismatch, PoleEvaluation
from .field import as_field
from .precision import PrecisionContext, is_numeric_scalar


class _Infinity:
    """Point at infinity on the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


def _coerce(x):
    if isinstance(x, (int, Fraction)):
        return as_field(x)
    return x


def _is_zero(x, ctx: Optional[PrecisionContext], scale) -> bool:
    if is_numeric_scalar(x):
        tol = ctx.tolerance if ctx is not None else 0
        return abs(x) <= tol * scale
    return x.is_zero()


@dataclass(frozen=True)
class MobiusMap:
    a: Any
    b: Any
    c: Any
    d: Any

    def __post_init__(self):
        vals = tuple(_coerce(v) for v in (self.a, self.b, self.c, self.d))
        kinds = {is_numeric_scalar(v) for v in vals}
        if len(kinds) > 1:
            raise FieldMismatch("map mixes exact and floating entries")
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)

    @property
    def is_exact(self) -> bool:
        return not is_numeric_scalar(self.a)

    def determinant(self):
        return self.a * self.d - self.b * self.c

    def _scale(self):
        if self.is_exact:
            return 1
        return 1 + max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def apply(self, x, ctx: Optional[PrecisionContext] = None):
        """Image of x, where x may be INFINITY and the pole maps to INFINITY.

        Raises PoleEvaluation only for a degenerate map sending x to 0/0.
        """
        if x is INFINITY:
            if _is_zero(self.c, ctx, self._scale()):
                if _is_zero(self.a, ctx, self._scale()):
                    raise PoleEvaluation("degenerate image of INFINITY")
                return INFINITY
            return self.a / self.c
        x = _coerce(x)
        num = self.a * x + self.b
        den = self.c * x + self.d
        sc = self._scale() * (1 + abs(x)) if is_numeric_scalar(x) else 1
        if _is_zero(den, ctx, sc):
            if _is_zero(num, ctx, sc):
                raise PoleEvaluation("0/0 at the pole of a degenerate map")
            return INFINITY
        return num / den

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other: (self.compose(other)).apply(x) == self(other(x))."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMap":
        det = self.determinant()
        degenerate = det.is_zero() if self.is_exact else det == 0
        if degenerate:
            raise DivisionByZero("map has zero determinant")
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def embed(self, ctx: PrecisionContext) -> "MobiusMap":
        """Floating copy of an exact map at ctx precision."""
        if not self.is_exact:
            return self
        return MobiusMap(*(v.embed(ctx) for v in (self.a, self.b, self.c, self.d)))

    def is_identity(self, ctx: Optional[PrecisionContext] = None) -> bool:
        """True when the map is the identity of the projective line."""
        sc = self._scale()
        return (_is_zero(self.b, ctx, sc) and _is_zero(self.c, ctx, sc)
                and _is_zero(self.a - self.d, ctx, sc))

    def order(self, max_order: int = 12,
              ctx: Optional[PrecisionContext] = None) -> Optional[int]:
        """Smallest k <= max_order with the k-fold composite the identity."""
        acc = self
        for k in range(1, max_order + 1):
            if acc.is_identity(ctx):
                return k
            acc = acc.compose(self)
        return None

    def __str__(self) -> str:
        return f"(({self.a})*x + ({self.b})) / (({self.c})*x + ({self.d}))"


def rsc_cycle() -> MobiusMap:
    """n(x) = 1/(1 - x), the order-three map permuting every p_B's roots."""
    return MobiusMap(0, 1, -1, 1)


def mobius_apply(m: MobiusMap, x, ctx: Optional[PrecisionContext] = None):
    """Functional form of MobiusMap.apply."""
    return m.apply(x, ctx)


def mobius_compose(m1: MobiusMap, m2: MobiusMap) -> MobiusMap:
    """m1 after m2, as a single map."""
    return m1.compose(m2)


def mobius_order(m: MobiusMap, max_order: int = 12,
                 ctx: Optional[PrecisionContext] = None) -> Optional[int]:
    """Functional form of MobiusMap.order."""
    return m.order(max_order, ctx)
