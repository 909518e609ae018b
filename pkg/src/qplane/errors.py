"""Exception hierarchy shared by every qplane module."""

from __future__ import annotations


class QPlaneError(Exception):
    """Base class for recoverable qplane errors."""


class NotDivisible(QPlaneError, ArithmeticError):
    """Polynomial long division left a remainder or a non-integer quotient."""


class DivisionByZero(QPlaneError, ZeroDivisionError):
    pass


class BothZero(QPlaneError, ValueError):
    """gcd(0, 0) was requested."""


class OutOfRange(QPlaneError, ValueError):
    pass


class OracleBoundExceeded(QPlaneError, ValueError):
    pass


class NonzeroConstantTerm(QPlaneError, ValueError):
    """exp_q was asked to substitute an argument with a constant term."""


class PoleAtSpecialization(QPlaneError, ZeroDivisionError):
    """A coefficient denominator vanishes at the requested value of q."""

    def __init__(self, monomial, denominator, value):
        self.monomial = monomial
        self.denominator = denominator
        self.value = value
        super().__init__(
            f"pole at q = {value}: denominator {denominator} of the "
            f"coefficient of {monomial} vanishes"
        )


class MissingOrder(QPlaneError, ValueError):
    """An expression containing exp_q was evaluated without a truncation order."""


class ParseError(QPlaneError, ValueError):
    """Malformed expression text.

    ``offset`` is a byte offset into the UTF-8 encoding of the input and
    ``expected`` is the set of tokens that would have been accepted there.
    """

    def __init__(self, message, offset=0, expected=frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        self.message = message
        detail = f"{message} at byte {offset}"
        if self.expected:
            detail += "; expected one of: " + ", ".join(sorted(self.expected))
        super().__init__(detail)


class ExponentTooLarge(ParseError):
    pass


class EvaluationError(QPlaneError, ValueError):
    """An expression is well-formed but has no meaning (e.g. division by x)."""


class InvariantViolation(AssertionError):
    """An internal cross-check failed. This is a bug, never user error."""
