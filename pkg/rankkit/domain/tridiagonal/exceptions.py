"""
Domain exceptions for tridiagonal nonnegative rank.
"""

from rankkit.shared.exceptions import ValidationError


class NotTridiagonalError(ValidationError):
    """Raised when a matrix has a nonzero entry with |i−j| > 1."""


class PreconditionViolatedError(ValidationError):
    """Raised when an operation's structural precondition does not hold."""


class UnsupportedBandwidthError(ValidationError):
    """Raised when nonnegative rank is requested for a k-band matrix with k >= 2."""
