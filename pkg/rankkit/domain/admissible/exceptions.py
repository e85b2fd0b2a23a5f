"""
Domain exceptions for admissibility checks.
"""

from rankkit.shared.exceptions import NotFoundError, ValidationError


class EmptySubsetError(ValidationError):
    """Raised when an admissibility check receives an empty subset."""


class NotInSupportError(NotFoundError):
    """Raised when a subset contains a position outside the support."""


class UnsupportedKindError(ValidationError):
    """Raised when admissibility is requested for a semiring without a cover characterization."""
