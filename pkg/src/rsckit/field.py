"""Exact arithmetic in real quadratic and biquadratic fields.

A FieldElement is a number of the form

    c0 + c1*sqrt(L1) + c2*sqrt(L2) + c3*sqrt(L3)

with rational ci, where the radicands are built from at most two generators
g1 < g2 (square-free integers >= 2): L1 = g1, L2 = g2, L3 = g1*g2. Keeping
the last radicand as the literal product keeps multiplication closed on the
basis: sqrt(La)*sqrt(Lb) re-expands with an integer carried out of the
common part of the two masks.

Canonical form, maintained by every operation:

* generators are the two smallest members of the closed triple
  {g1, g2, squarefree_kernel(g1*g2)}, so the same field always gets the
  same basis and equality is componentwise;
* generators that no longer appear in any nonzero coordinate are dropped,
  so a rational result really is gens == () and a single-surd result keeps
  exactly one generator (with its radicand reduced square-free).

Merging the fields of two operands follows the same triple rule; anything
that would need a third independent surd raises FieldTooLarge. Division is
exact via conjugation (norms of nonzero elements are nonzero because two
distinct square-free integers never have a square product).

The module also provides the exact square root inside these fields (used to
take discriminant square roots without any floating detour) and recognize(),
which reconstructs an exact element from a high-precision float by
height-bounded integer-relation detection.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DivisionByZero, FieldTooLarge
from .precision import PrecisionContext, is_real_scalar

# ---------------------------------------------------------------------------
# square-free factorization helpers

_PRIMES: list[int] = [2, 3, 5, 7, 11, 13]
_PRIME_LIMIT = 14


def _extend_primes(limit: int) -> None:
    global _PRIME_LIMIT
    if limit <= _PRIME_LIMIT:
        return
    limit = max(2 * limit, 1024)
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    _PRIMES[:] = [i for i, flag in enumerate(sieve) if flag]
    _PRIME_LIMIT = limit


def _icbrt(n: int) -> int:
    r = round(n ** (1 / 3))
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def squarefree_split(n: int) -> tuple[int, int]:
    """n = s*s*k with k square-free; returns (s, k). Requires n >= 1."""
    if n < 1:
        raise ValueError("squarefree_split needs a positive integer")
    s, k = 1, 1
    m = n
    # trial division only to the cube root: whatever remains has at most
    # two prime factors, so the square test below settles its shape
    bound = _icbrt(n) + 1 if n < 10**18 else 1_000_000
    _extend_primes(bound)
    for p in _PRIMES:
        if p > bound or p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                k *= p
    if m > 1:
        r = math.isqrt(m)
        if r * r == m:
            s *= r
        elif m < 10**18:
            k *= m
        else:
            raise FieldTooLarge(f"cannot square-free factor {n}")
    return s, k


def squarefree_kernel(n: int) -> int:
    return squarefree_split(n)[1]


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# generator bookkeeping

def _canonical_pair(d1: int, d2: int) -> tuple[int, int]:
    """The canonical two generators of Q(sqrt(d1), sqrt(d2)), d1 != d2."""
    third = squarefree_kernel(d1 * d2)
    a, b, _ = sorted({d1, d2, third})
    return a, b


def _merge_gens(kernels: set[int]) -> tuple[int, ...]:
    """Smallest canonical generator tuple whose field contains all kernels."""
    if not kernels:
        return ()
    if len(kernels) == 1:
        return (next(iter(kernels)),)
    ks = sorted(kernels)
    g1, g2 = _canonical_pair(ks[0], ks[1])
    allowed = {g1, g2, squarefree_kernel(g1 * g2)}
    if not set(ks) <= allowed:
        raise FieldTooLarge(
            "more than two independent square roots: " + ", ".join(map(str, ks))
        )
    return g1, g2


def _literal(gens: tuple[int, ...], mask: int) -> int:
    out = 1
    for i, g in enumerate(gens):
        if mask >> i & 1:
            out *= g
    return out


_ZERO = Fraction(0)


class FieldElement:
    """An element of Q, Q(sqrt(d)), or Q(sqrt(d1), sqrt(d2)). Immutable."""

    __slots__ = ("gens", "coeffs", "_hash")

    gens: tuple[int, ...]
    coeffs: tuple[Fraction, ...]

    def __init__(self, gens: tuple[int, ...], coeffs: tuple[Fraction, ...]):
        # private; use from_rational / sqrt_int / arithmetic instead
        self.gens = gens
        self.coeffs = coeffs
        self._hash = None

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "FieldElement":
        return FieldElement((), (Fraction(q),))

    @staticmethod
    def sqrt_int(n: int) -> "FieldElement":
        """sqrt of a nonnegative integer, reduced so the radicand is square-free."""
        if n < 0:
            raise ValueError("sqrt_int needs a nonnegative integer")
        s, k = squarefree_split(n) if n else (0, 1)
        if k == 1 or n == 0:
            return FieldElement.from_rational(s if n else 0)
        return FieldElement((k,), (_ZERO, Fraction(s)))

    @staticmethod
    def _build(gens: tuple[int, ...], coeffs: Sequence[Fraction]) -> "FieldElement":
        """Normalize a raw coefficient vector over possibly oversized gens."""
        nonzero = [m for m, c in enumerate(coeffs) if c]
        irrational = [m for m in nonzero if m]
        if not irrational:
            return FieldElement((), (coeffs[0] if coeffs else _ZERO,))
        if len(irrational) == 1:
            m = irrational[0]
            s, k = squarefree_split(_literal(gens, m))
            return FieldElement((k,), (coeffs[0], coeffs[m] * s))
        # at least two independent surds: gens must stay as the (already
        # canonical) pair
        return FieldElement(tuple(gens), tuple(coeffs))

    # -- canonical field merging --------------------------------------------

    def _kernels(self) -> set[int]:
        return set(self.gens)

    def _lift(self, gens: tuple[int, ...]) -> tuple[Fraction, ...]:
        """Coefficients of self re-expressed over a containing field's basis."""
        size = 1 << len(gens)
        target_kernel = {squarefree_kernel(_literal(gens, m)): m for m in range(size)}
        out = [_ZERO] * size
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            s, k = squarefree_split(_literal(self.gens, m))
            tm = target_kernel.get(k)
            if tm is None:
                raise FieldTooLarge(
                    f"sqrt({k}) does not lie in the field generated by {gens}"
                )
            st, _ = squarefree_split(_literal(gens, tm))
            out[tm] += c * Fraction(s, st)
        return tuple(out)

    @staticmethod
    def _common(a: "FieldElement", b: "FieldElement"):
        if a.gens == b.gens:
            return a.gens, a.coeffs, b.coeffs
        gens = _merge_gens(a._kernels() | b._kernels())
        return gens, a._lift(gens), b._lift(gens)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElement.from_rational(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        gens, ca, cb = FieldElement._common(self, other)
        return FieldElement._build(gens, tuple(x + y for x, y in zip(ca, cb)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.gens, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        gens, ca, cb = FieldElement._common(self, other)
        size = len(ca)
        acc = [_ZERO] * size
        for i, x in enumerate(ca):
            if not x:
                continue
            for j, y in enumerate(cb):
                if not y:
                    continue
                carried = _literal(gens, i & j)
                acc[i ^ j] += x * y * carried
        return FieldElement._build(gens, acc)

    __rmul__ = __mul__

    def _inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of exact zero")
        if not self.gens:
            return FieldElement.from_rational(1 / self.coeffs[0])
        if len(self.gens) == 1:
            x, y = self.coeffs
            d = self.gens[0]
            norm = x * x - d * y * y
            return FieldElement._build(self.gens, (x / norm, -y / norm))
        conj = self.conjugates()[1]  # flip the second generator
        re_part = self * conj  # lands in Q(sqrt(g1)) or Q
        return conj * re_part._inverse()

    def __truediv__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other._inverse()

    def __rtruediv__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self._inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self._inverse() ** (-n)
        out = FieldElement.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates and comparisons ------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    @property
    def is_rational(self) -> bool:
        return not self.gens

    def as_rational(self) -> Fraction:
        if self.gens:
            raise ValueError(f"{self} is irrational")
        return self.coeffs[0]

    def __eq__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.gens == other.gens and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, self.coeffs))
        return self._hash

    def sign(self) -> int:
        """Exact sign under the embedding that takes every sqrt positive."""
        if self.is_zero():
            return 0
        if not self.gens:
            q = self.coeffs[0]
            return 1 if q > 0 else -1
        scale = sum(abs(c) * math.isqrt(_literal(self.gens, m)) + abs(c)
                    for m, c in enumerate(self.coeffs))
        bits = 128
        while bits <= 4096:
            ctx = PrecisionContext(bits=bits)
            v = self.embed(ctx)
            if abs(v) > ctx.real(scale) * ctx.real(2) ** (16 - bits):
                return 1 if v > 0 else -1
            bits *= 2
        raise ArithmeticError(f"sign of {self} is numerically ambiguous")

    def __lt__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = FieldElement._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    # -- embeddings -----------------------------------------------------------

    def embed(self, ctx: PrecisionContext):
        """The canonical real value (every sqrt positive) at ctx precision."""
        mp = ctx._mp
        with mp.workprec(ctx.bits + 32):
            acc = mp.mpf(0)
            for m, c in enumerate(self.coeffs):
                if not c:
                    continue
                term = mp.mpf(c.numerator) / c.denominator
                if m:
                    term *= mp.sqrt(_literal(self.gens, m))
                acc += term
        return +acc

    def __float__(self) -> float:
        return float(self.embed(PrecisionContext(bits=64)))

    def conjugates(self) -> tuple["FieldElement", ...]:
        """All 2**g field conjugates; identity first, last generator flips fastest."""
        g = len(self.gens)
        out = []
        for pat in range(1 << g):
            coeffs = []
            for m, c in enumerate(self.coeffs):
                # pat bit i set means flip gens[g-1-i]
                flips = 0
                for i in range(g):
                    if pat >> i & 1 and m >> (g - 1 - i) & 1:
                        flips += 1
                coeffs.append(-c if flips % 2 else c)
            out.append(FieldElement(self.gens, tuple(coeffs)))
        return tuple(out)

    # -- formatting -----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            n = c.numerator * (den // c.denominator)
            if m == 0:
                parts.append(f"{n}")
            else:
                lit = _literal(self.gens, m)
                if n == 1:
                    parts.append(f"sqrt({lit})")
                elif n == -1:
                    parts.append(f"-sqrt({lit})")
                else:
                    parts.append(f"{n}*sqrt({lit})")
        body = parts[0]
        for p in parts[1:]:
            body += p if p.startswith("-") else "+" + p
        if den == 1:
            return body
        if len(parts) == 1 and "*" not in body:
            return f"{body}/{den}"
        return f"({body})/{den}"

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def latex(self) -> str:
        if self.is_zero():
            return "0"
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            n = c.numerator * (den // c.denominator)
            if m == 0:
                parts.append(f"{n}")
            else:
                lit = _literal(self.gens, m)
                if n == 1:
                    parts.append(f"\\sqrt{{{lit}}}")
                elif n == -1:
                    parts.append(f"-\\sqrt{{{lit}}}")
                else:
                    parts.append(f"{n}\\sqrt{{{lit}}}")
        body = parts[0]
        for p in parts[1:]:
            body += p if p.startswith("-") else "+" + p
        if den == 1:
            return body
        return f"\\frac{{{body}}}{{{den}}}"


ONE = FieldElement.from_rational(1)
ZERO = FieldElement.from_rational(0)


def as_field(x) -> FieldElement:
    """Coerce int / Fraction / FieldElement to FieldElement."""
    out = FieldElement._coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact field scalar")
    return out


# ---------------------------------------------------------------------------
# exact square roots inside the supported fields

def _sqrt_rational(q: Fraction) -> Optional[FieldElement]:
    if q < 0:
        return None
    if q == 0:
        return ZERO
    s, k = squarefree_split(q.numerator * q.denominator)
    # sqrt(a/b) = sqrt(a*b)/b = s*sqrt(k)/b
    if k == 1:
        return FieldElement.from_rational(Fraction(s, q.denominator))
    return FieldElement((k,), (_ZERO, Fraction(s, q.denominator)))


def _sqrt_single(e: FieldElement, in_field_only: bool) -> Optional[FieldElement]:
    """Square root of v0 + v1*sqrt(d) (v1 != 0), possibly one surd richer."""
    d = e.gens[0]
    v0, v1 = e.coeffs
    norm = rational_sqrt(v0 * v0 - d * v1 * v1)
    if norm is None:
        return None
    for s in (norm, -norm):
        x = rational_sqrt((v0 + s) / 2)
        if x:
            z = v1 / (2 * x)
            y = FieldElement._build(e.gens, (x, z))
            if y * y == e:
                return y
    if in_field_only:
        return None
    for s in (norm, -norm):
        t = (v0 + s) / 2
        if t <= 0:
            continue
        g2 = squarefree_kernel(t.numerator * t.denominator)
        if g2 == 1 or g2 == d:
            continue
        x = rational_sqrt(t / g2)
        if x:
            z = v1 / (2 * x * g2)
            y = FieldElement._build(e.gens, (x, z)) * FieldElement.sqrt_int(g2)
            if y * y == e:
                return y
    return None


def _sqrt_double(e: FieldElement) -> Optional[FieldElement]:
    """Square root of a genuinely biquadratic element, inside its own field."""
    g1, g2 = e.gens
    c0, c1, c2, c3 = e.coeffs
    # split e = A + B*sqrt(g2) with A, B in Q(sqrt(g1))
    A = FieldElement._build((g1,), (c0, c1))
    B = FieldElement._build((g1,), (c2, c3))
    disc = A * A - g2 * (B * B)
    root = field_sqrt(disc)
    if root is None or root.gens not in ((), (g1,)):
        return None
    for sgn in (root, -root):
        u = (A + sgn) / 2
        alpha = field_sqrt(u)
        if alpha is None or alpha.is_zero() or alpha.gens not in ((), (g1,)):
            continue
        beta = B / (2 * alpha)
        y = alpha + beta * FieldElement.sqrt_int(g2)
        if y * y == e:
            return y
    # a canonical two-generator element always has a nonzero sqrt(g2) part,
    # so the alpha == 0 family (y = beta*sqrt(g2)) cannot occur here
    return None


def field_sqrt(e: FieldElement) -> Optional[FieldElement]:
    """Exact principal square root within at most two surds, else None.

    The result, when it exists, satisfies result**2 == e exactly and embeds
    to a positive real (sqrt of zero is zero). Returns None when the square
    root lives outside every field of the supported shape, e.g. when it is
    a genuine quartic irrationality.
    """
    e = as_field(e)
    if e.is_rational:
        y = _sqrt_rational(e.as_rational())
    elif len(e.gens) == 1:
        y = _sqrt_single(e, in_field_only=False)
    else:
        y = _sqrt_double(e)
    if y is None:
        return None
    if y * y != e:
        return None
    if not y.is_zero() and y.sign() < 0:
        y = -y
    return y


# ---------------------------------------------------------------------------
# recognition of exact elements from high-precision floats

_MAX_HEIGHT_RATIONAL = 10 ** 9
_MAX_HEIGHT_SINGLE = 100_000
_MAX_HEIGHT_DOUBLE = 512


def _normalize_gens(gens: Iterable[int]) -> tuple[int, ...]:
    kernels = set()
    for g in gens:
        if g < 2:
            raise ValueError(f"generator {g} must be at least 2")
        kernels.add(squarefree_kernel(g))
    return _merge_gens(kernels)


def height_cap(gens: Iterable[int]) -> int:
    """Largest height recognize() accepts for this generator set.

    The cap shrinks as the field grows so that any two distinct candidates
    of admissible height stay separated by far more than the default
    tolerance; that separation is what makes a recognition hit unique and
    a miss a certificate. Callers that take a user-facing height should
    clamp with min(height, height_cap).
    """
    gens = _normalize_gens(gens)
    if not gens:
        return _MAX_HEIGHT_RATIONAL
    if len(gens) == 1:
        return _MAX_HEIGHT_SINGLE
    return _MAX_HEIGHT_DOUBLE


def recognize(v, gens: Iterable[int], height: int, ctx: PrecisionContext
              ) -> Optional[FieldElement]:
    """Reconstruct an exact field element from a real scalar, or None.

    The candidate space is (n0 + n1*sqrt(L1) + ...)/den over the radicand
    basis of `gens`, with den and every |ni| bounded by `height`; a hit
    must match v within ctx.tolerance at full precision, and distinct
    candidates differ by far more than that (heights are capped so this
    stays true), so the result is unique and deterministic.

    Rational targets are scanned denominator-ascending. Surd targets run
    PSLQ on (v, 1, sqrt(L1), ...), which either finds the single relation
    generating the rank-one lattice of a true member or certifies that no
    relation with coefficients up to `height` exists; the detection
    residual it bounds is den-scaled, so a member is found whenever v
    approximates it to tolerance/den (for values carrying the context's
    full working accuracy this is never the binding constraint).

    `gens` lists the permitted generators (the element may use fewer). A
    None return means no candidate of this height matches.
    """
    if height < 1:
        raise ValueError("height must be positive")
    gens = _normalize_gens(gens)
    cap = height_cap(gens)
    if height > cap:
        raise ValueError(
            f"height {height} exceeds the cap {cap} for generators {gens}")
    if not is_real_scalar(v):
        v = ctx.real(v)
    mp = ctx._mp
    tol = ctx.tolerance

    if not gens:
        for den in range(1, height + 1):
            x = v * den
            n0 = int(mp.nint(x))
            if abs(n0) <= height and abs(x - n0) < tol * den:
                return FieldElement.from_rational(Fraction(n0, den))
        return None

    basis = [mp.mpf(1)]
    for mask in range(1, 1 << len(gens)):
        basis.append(mp.sqrt(_literal(gens, mask)))
    if abs(v) < tol:
        return FieldElement.from_rational(Fraction(0))
    rel = mp.pslq([v] + basis, tol=tol, maxcoeff=height, maxsteps=10_000)
    if rel is None or rel[0] == 0:
        return None
    den, nums = rel[0], [-r for r in rel[1:]]
    if den < 0:
        den, nums = -den, [-n for n in nums]
    cand = FieldElement._build(gens, tuple(Fraction(n, den) for n in nums))
    if abs(v - cand.embed(ctx)) < tol:
        return cand
    return None
