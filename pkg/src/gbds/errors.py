"""Exception types shared by the package."""


class GbdsError(Exception):
    """Base class for all errors raised by gbds."""


class UsageError(GbdsError, ValueError):
    """An operation was called with arguments outside its contract."""


class DomainError(GbdsError, ValueError):
    """A partial map was applied outside its domain."""


class ValidationError(GbdsError, ValueError):
    """A system description violates the axioms."""


class ParseError(GbdsError, ValueError):
    """Malformed textual input, with an optional position."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)
