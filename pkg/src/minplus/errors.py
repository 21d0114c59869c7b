"""Shared exception types."""


class MinPlusError(Exception):
    """Base class for library errors."""


class CapExceeded(MinPlusError):
    """An enumeration exceeded its configured size cap.

    Carries enough context for the caller to retry with a larger cap or a
    cheaper algorithm.
    """

    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count


class ParseError(MinPlusError, ValueError):
    """Malformed textual input (value, matrix, or polynomial)."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            location = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({location})"
        super().__init__(message)
        self.line = line
        self.column = column
