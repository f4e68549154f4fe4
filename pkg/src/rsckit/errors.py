"""Exception types shared across the package.

Every domain failure raises a subclass of RsckitError so callers (and the
command line driver) can separate "the mathematics said no" from genuine
bugs. Parse errors carry a position; everything else is message-only.
"""

from __future__ import annotations


class RsckitError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(RsckitError, ZeroDivisionError):
    """Division by an exact zero scalar."""


class FieldTooLarge(RsckitError):
    """An operation would need more than two independent quadratic surds."""


class FieldMismatch(RsckitError):
    """Exact and floating scalars were mixed where a single kind is required."""


class RepeatedRoots(RsckitError):
    """The cubic has a vanishing discriminant, so no shift construction applies."""


class SqrtNotRepresentable(RsckitError):
    """The discriminant has no square root in any supported quadratic field."""


class VerificationFailed(RsckitError):
    """An exact or numeric identity check that must hold did not."""


class PoleEvaluation(RsckitError):
    """A Moebius map was evaluated at its pole with infinity disallowed."""


class NotAPermutation(RsckitError):
    """A map failed to permute a root multiset within tolerance."""


class NonConvergence(RsckitError):
    """Numeric root finding failed to reach the requested residual."""


class TranslationCase(RsckitError):
    """The cubic is a shifted pure cube, so no Ramanujan-cubic data exists."""


class NonRealShift(RsckitError):
    """The shift parameters are not real, so trigonometric roots do not apply."""


class NoBranchFound(RsckitError):
    """No assignment of cube-root branches satisfied the identity."""


class PrecisionTooLow(RsckitError):
    """Working precision is insufficient to round a quantity safely."""


class UnsupportedDegree(RsckitError):
    """A lattice computation was requested outside the supported degrees."""


class ParseError(RsckitError):
    """Input syntax error; `position` is a 0-based offset when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
