"""Dense univariate polynomial helpers over any ring with + and *.

Coefficients are stored ascending (index = degree). These are internal
utilities shared by the cubic expansions and the cosine-lattice code; they
work identically for int, Fraction, FieldElement, and mpmath scalars.
"""

from __future__ import annotations

from typing import Sequence


def trim(coeffs: Sequence) -> list:
    out = list(coeffs)
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(x + y)
    return trim(out)


def mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(a: Sequence, s) -> list:
    return trim([c * s for c in a])


def evaluate(a: Sequence, x):
    acc = a[-1]
    for c in reversed(a[:-1]):
        acc = acc * x + c
    return acc


def compose_linear(a: Sequence, s, t) -> list:
    """Coefficients of p(s*x + t)."""
    out = [a[-1]]
    for c in reversed(a[:-1]):
        # out <- out*(s*x + t) + c
        shifted = [0] + [u * s for u in out]
        out = [u * t for u in out] + [0]
        out = [x + y for x, y in zip(out, shifted)]
        out[0] = out[0] + c
    return trim(out)


def derivative(a: Sequence) -> list:
    if len(a) <= 1:
        return [0 * a[0]] if a else [0]
    return trim([i * c for i, c in enumerate(a)][1:])
