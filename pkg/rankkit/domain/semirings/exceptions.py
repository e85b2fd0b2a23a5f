"""
Domain exceptions for semiring arithmetic.
"""

from rankkit.shared.exceptions import ValidationError


class DimensionMismatchError(ValidationError):
    """Raised when inner dimensions of a product do not agree."""


class CarrierViolationError(ValidationError):
    """Raised when a value lies outside the semiring's carrier (e.g. fuzzy entry > 1)."""
