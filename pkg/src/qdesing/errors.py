"""Shared exception types."""


class QDesingError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(QDesingError):
    """An operation was called outside its documented contract."""


class ParseError(QDesingError):
    """Malformed input text; carries line/column plus what was expected."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class NoSolutionError(QDesingError):
    """A search concluded without finding a solution (not a failure)."""
