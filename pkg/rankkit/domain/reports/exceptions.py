"""
Domain exceptions for matrix and certificate files.
"""

from rankkit.shared.exceptions import ValidationError


class ParseError(ValidationError):
    """Raised when a BMX or certificate file is malformed; positions are 1-based."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column
