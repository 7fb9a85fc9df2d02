"""Exception hierarchy shared by every module."""


class AddiwordError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(AddiwordError, IndexError):
    """A factor or window does not fit inside the word."""


class DomainError(AddiwordError, ValueError):
    """An argument lies outside the operation's domain."""


class NoZeroCrossing(DomainError):
    """A binary square lies inside a single run of 1s and decodes to no letters."""


class NotFound(AddiwordError, LookupError):
    """The finite word holds no witness of the requested size."""


class ParseError(AddiwordError, ValueError):
    """Malformed word text; ``index`` is the 1-based ordinal of the bad token."""

    def __init__(self, message, line, column, token=None, index=None):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.token = token
        self.index = index
