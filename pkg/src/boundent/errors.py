"""Exception types raised across the package."""


class BoundEntError(Exception):
    """Base class for all package errors."""


class NotHermitian(BoundEntError, ValueError):
    pass


class NoConvergence(BoundEntError, ArithmeticError):
    pass


class DimensionMismatch(BoundEntError, ValueError):
    pass


class AlphaOutOfRange(BoundEntError, ValueError):
    pass


class InvalidState(BoundEntError, ValueError):
    """Matrix fails the density-matrix checks (Hermitian, unit trace, PSD)."""
