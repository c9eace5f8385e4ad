"""Exception types shared across the package."""

from __future__ import annotations


class EquicohError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(EquicohError):
    """A document is not syntactically valid JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(EquicohError):
    """A document is well-formed JSON but violates the documented schema."""

    def __init__(self, message: str, path: str = ""):
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path


class InputError(EquicohError):
    """Structurally valid input that an operation cannot accept."""


class DegenerateInputError(InputError):
    """Input whose momentum data collapses (e.g. equal extremal levels)."""


class InternalInconsistencyError(EquicohError):
    """An identity that must hold for valid input failed; indicates a bug or bad data."""
