"""Exception types shared across the library."""


class SpilistError(Exception):
    """Base class for all library-specific errors."""


class InvalidArgument(SpilistError, ValueError):
    """An argument violates a documented precondition."""


class FieldMismatch(InvalidArgument):
    """Operands belong to different prime fields."""


class ZeroInverse(SpilistError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class InvalidBasePoint(InvalidArgument):
    """A base point is zero or otherwise unusable."""


class SelectionExhausted(SpilistError):
    """Rejection sampling could not find admissible base points."""


class PoleAtZero(SpilistError, ZeroDivisionError):
    """Laurent polynomial with negative degrees evaluated at zero."""


class DegenerateSystem(SpilistError):
    """A bivariate system turned out not to be zero-dimensional."""
