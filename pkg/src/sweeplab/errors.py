"""Exception hierarchy shared by every sweeplab module."""


class SweepLabError(ValueError):
    """Base class for all library errors."""


class AlphabetError(SweepLabError):
    """A word contains a letter outside the permitted alphabet."""


class ShapeError(SweepLabError):
    """A partition or path does not fit the requested rectangle/trapezoid."""


class DomainError(SweepLabError):
    """An input lies outside the domain of the operation (e.g. not Dyck)."""


class ParameterError(SweepLabError):
    """Numeric parameters are unsupported (e.g. gcd(a, b) != 1)."""


class LevelOverflowError(SweepLabError, OverflowError):
    """A level left the signed 64-bit range."""


class NotInImageError(SweepLabError):
    """Label reconstruction or replay failed: the word is not in the image."""


class BudgetError(SweepLabError):
    """An enumeration would exceed the configured object budget."""
