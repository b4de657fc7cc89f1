"""Exception types shared across the package.

Division by a zero polynomial, rational function, or series raises the
built-in ZeroDivisionError; everything else domain-specific lives here.
"""


class QRealError(Exception):
    """Base class for errors raised by this package."""


class DomainError(QRealError):
    """An argument lies outside the mathematical domain of the operation."""


class NonConvergenceError(QRealError):
    """A limit computation exhausted its budget without stabilizing."""


class InsufficientPrecisionError(QRealError):
    """A series was asked for coefficients at or beyond its precision."""


class IntegralityError(QRealError):
    """A series asserted to have integer coefficients does not."""
