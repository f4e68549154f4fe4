"""Arbitrary-precision floating scalars and branch conventions.

All numeric work in the package runs through a PrecisionContext, which wraps
a private mpmath context at a fixed binary precision. Values produced by a
context carry that precision with them (mpmath binds numbers to the context
they came from), so downstream arithmetic does not silently degrade to the
53-bit default. Contexts are never stored in module globals and two contexts
never share state, so independent computations can run side by side.

Branch conventions, used everywhere radicals appear:

* principal_sqrt: the root with nonnegative real part; on the negative real
  axis the root with positive imaginary part. For nonnegative reals this is
  the ordinary square root and the result stays real.
* cube_roots: all three roots, principal first (argument in (-pi/3, pi/3]),
  then the principal times omega and omega squared, omega = exp(2*pi*i/3).
  For nonnegative real input the principal root is the real one and is
  returned as a real scalar. real_cbrt picks the real root of a real input
  regardless of sign, which is branch index 0 for nonnegative radicands and
  index 1 for negative ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath

# Documentation aliases. Each PrecisionContext mints its own mpf/mpc classes
# (an mpmath.clone detail), so code must not isinstance against these; use
# is_real_scalar / is_numeric_scalar instead.
BigReal = mpmath.mpf
BigComplex = mpmath.mpc

DEFAULT_BITS = 256


def is_real_scalar(x: Any) -> bool:
    return hasattr(x, "_mpf_")


def is_complex_scalar(x: Any) -> bool:
    return hasattr(x, "_mpc_")


def is_numeric_scalar(x: Any) -> bool:
    return hasattr(x, "_mpf_") or hasattr(x, "_mpc_")


@dataclass(frozen=True)
class PrecisionContext:
    """Explicit working precision plus the tolerance derived from it.

    bits: binary precision of the wrapped mpmath context, at least 64.
    tolerance: acceptance threshold for residuals; defaults to 2**(-bits/2)
    so that quantities computed with ~bits of accuracy clear it with a wide
    margin while genuine mismatches miss it by hundreds of orders.
    """

    bits: int = DEFAULT_BITS
    tolerance: Any = None
    _mp: Any = field(init=False, default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError(f"precision must be at least 64 bits, got {self.bits}")
        ctx = mpmath.mp.clone()
        ctx.prec = self.bits
        object.__setattr__(self, "_mp", ctx)
        if self.tolerance is None:
            object.__setattr__(self, "tolerance", ctx.mpf(2) ** (-(self.bits // 2)))
        else:
            object.__setattr__(self, "tolerance", ctx.mpf(self.tolerance))

    # -- constructors ------------------------------------------------------

    def real(self, x) -> BigReal:
        """Convert int, Fraction, str, or float-like to a real scalar."""
        if isinstance(x, Fraction):
            return self._mp.mpf(x.numerator) / x.denominator
        return self._mp.mpf(x)

    def complex(self, re, im=0) -> BigComplex:
        return self._mp.mpc(self.real(re), self.real(im))

    def to_scalar(self, x):
        """Like real() but passes numeric scalars and complexes through."""
        if is_numeric_scalar(x):
            return x + self.zero
        if isinstance(x, complex):
            return self._mp.mpc(x)
        return self.real(x)

    # -- frequently used constants ----------------------------------------

    @property
    def zero(self) -> BigReal:
        return self._mp.mpf(0)

    @property
    def pi(self) -> BigReal:
        return +self._mp.pi

    @property
    def omega(self) -> BigComplex:
        """Primitive cube root of unity exp(2*pi*i/3)."""
        return self._mp.mpc(-0.5, 0) + self._mp.mpc(0, 1) * self._mp.sqrt(3) / 2

    @property
    def dps(self) -> int:
        return self._mp.dps

    # -- elementary functions at context precision -------------------------

    def sqrt(self, x):
        return self._mp.sqrt(x)

    def cos(self, x):
        return self._mp.cos(x)

    def acos(self, x):
        return self._mp.acos(x)

    def atan(self, x):
        return self._mp.atan(x)

    def exp(self, x):
        return self._mp.exp(x)

    def log(self, x):
        return self._mp.log(x)

    def cospi_frac(self, q: Fraction) -> BigReal:
        """cos(pi * q) for a rational q, computed at full precision."""
        return self._mp.cospi(self.real(q))

    def fabs(self, x) -> BigReal:
        return self._mp.fabs(x)

    def nearest_int(self, x) -> int:
        """Nearest integer to a real scalar, exact at any magnitude."""
        return int(self._mp.nint(x))

    def nstr(self, x, digits: int | None = None) -> str:
        return self._mp.nstr(x, digits if digits is not None else self.dps + 8)

    def log2_abs(self, x) -> float:
        """Rounded binary magnitude of |x|; -inf for exact zero."""
        ax = self._mp.fabs(x)
        if ax == 0:
            return float("-inf")
        return float(self._mp.log(ax, 2))


def principal_sqrt(z, ctx: PrecisionContext):
    """Square root with Re >= 0, positive imaginary on the branch cut.

    Real nonnegative input stays real. Complex input follows mpmath's
    principal branch, which matches the stated convention.
    """
    z = ctx.to_scalar(z)
    if is_real_scalar(z) and z >= 0:
        return ctx._mp.sqrt(z)
    return ctx._mp.sqrt(ctx._mp.mpc(z))


def real_cbrt(x, ctx: PrecisionContext):
    """The real cube root of a real scalar, any sign."""
    x = ctx.real(x)
    if x < 0:
        return -ctx._mp.cbrt(-x)
    return ctx._mp.cbrt(x)


def cube_roots(z, ctx: PrecisionContext):
    """All three cube roots, principal first, then times omega, omega**2.

    The principal root has argument in (-pi/3, pi/3]. For a nonnegative real
    input it is real and returned as a real scalar; the other two are complex.
    """
    z = ctx.to_scalar(z)
    mp = ctx._mp
    if is_real_scalar(z) and z >= 0:
        r = mp.cbrt(z)
    else:
        zc = mp.mpc(z)
        if zc == 0:
            r = mp.mpf(0)
        else:
            r = mp.exp(mp.log(zc) / 3)
    w = ctx.omega
    return [r, r * w, r * w * w]
