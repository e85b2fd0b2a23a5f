"""
Domain exceptions for the random band-matrix generator.
"""

from rankkit.shared.exceptions import ValidationError


class BadParametersError(ValidationError):
    """Raised when generator parameters are out of range."""
