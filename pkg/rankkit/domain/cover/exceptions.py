"""
Domain exceptions for cover solving and rank oracles.
"""

from rankkit.shared.exceptions import InvariantViolationError, LimitExceededError


class UncoverableError(InvariantViolationError):
    """Raised when some support entry lies in no admissible set."""


class TooLargeError(LimitExceededError):
    """Raised when an exhaustive oracle is asked for an instance beyond its guard."""


class OracleMismatchError(InvariantViolationError):
    """Raised when a fast algorithm and its oracle disagree."""


class CertificateRejectedError(InvariantViolationError):
    """Raised when a computed certificate fails exact verification."""
