"""Shared exception types."""


class ParseError(ValueError):
    """Malformed input text (profile, graph, or set-family file)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceededError(RuntimeError):
    """A brute-force oracle refused an instance above its configured size cap."""
