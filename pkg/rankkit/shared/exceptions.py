"""
Shared exception handling infrastructure for rankkit.

This module provides the base exception classes used by every domain area and
the translation of domain errors into process exit codes for the CLI layer.
"""

from typing import Final


class DomainError(Exception):
    """
    Base exception for all domain-specific errors.

    All domain exceptions inherit from this base class so the CLI can map
    them onto exit codes in one place.
    """

    def __init__(self, message: str, error_code: str | None = None) -> None:
        """
        Initialize domain error.

        Args:
            message: Human-readable error message
            error_code: Code shown in diagnostics; defaults to the class name
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code if error_code is not None else self.__class__.__name__


class ValidationError(DomainError):
    """Base exception for invalid input values or shapes."""


class NotFoundError(DomainError):
    """Base exception for indices that do not address an existing entry."""


class ConflictError(DomainError):
    """Base exception for conflicting input (e.g. a position given twice)."""


class LimitExceededError(DomainError):
    """Base exception for inputs beyond a configured guard."""


class InvariantViolationError(DomainError):
    """Base exception for failed self-checks (certificates, oracle agreement)."""


EXIT_OK: Final = 0
EXIT_USAGE: Final = 1
EXIT_INVALID_INPUT: Final = 2
EXIT_INVARIANT_FAILURE: Final = 3

# Exit code mapping for domain exceptions
EXCEPTION_TO_EXIT_CODE: dict[type[DomainError], int] = {
    ValidationError: EXIT_INVALID_INPUT,
    NotFoundError: EXIT_INVALID_INPUT,
    ConflictError: EXIT_INVALID_INPUT,
    LimitExceededError: EXIT_INVALID_INPUT,
    InvariantViolationError: EXIT_INVARIANT_FAILURE,
}


def get_exit_code(exception: DomainError) -> int:
    """
    Get the process exit code for a domain exception.

    Args:
        exception: The domain exception instance

    Returns:
        Exit code for the exception type
    """
    for exc_type, exit_code in EXCEPTION_TO_EXIT_CODE.items():
        if isinstance(exception, exc_type):
            return exit_code

    # Unknown domain errors are treated as internal failures
    return EXIT_INVARIANT_FAILURE


def format_domain_error(exception: DomainError) -> str:
    """Render a domain error as a single diagnostic line."""
    if exception.error_code:
        return f"{exception.error_code}: {exception.message}"
    return exception.message
