class GelfandTsetlinError(Exception):
    """Base class for every error raised by the gtmodules apps"""


class BoundsError(GelfandTsetlinError, IndexError):
    """A row, column or generator index lies outside the tableau"""


class DomainError(GelfandTsetlinError, ValueError):
    """A mathematical precondition fails (non-generic seed, zero denominator, ...)"""


class SeedMismatchError(GelfandTsetlinError, ValueError):
    """Two tableaux or vectors that must share a seed do not"""


class InvariantViolation(GelfandTsetlinError, RuntimeError):
    """A search or check that a theorem guarantees to succeed has failed"""
