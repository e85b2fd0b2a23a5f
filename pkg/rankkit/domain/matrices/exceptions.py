"""
Domain exceptions for matrix construction and surgery.
"""

from rankkit.shared.exceptions import ConflictError, NotFoundError, ValidationError


class DuplicateEntryError(ConflictError):
    """Raised when the same position is given twice."""


class OutOfRangeError(NotFoundError):
    """Raised when an index lies outside 1..n (or outside a submatrix)."""


class OutOfBandError(ValidationError):
    """Raised when a nonzero entry violates |i−j| ≤ k."""


class NegativeEntryError(ValidationError):
    """Raised when an entry is negative."""


class InvalidRationalError(ValidationError):
    """Raised when a value is not an integer, ``p/q`` or decimal literal."""
