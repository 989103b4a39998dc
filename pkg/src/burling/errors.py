"""Shared exception types.

Parse and validation problems map to CLI exit code 2, resource limits to
exit code 3.  Everything else is a bug.
"""


class BurlingError(Exception):
    pass


class ParseError(BurlingError):
    """Malformed input document.  Carries the 1-based offending line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(BurlingError):
    """A structurally well-formed value violates a semantic invariant."""


class BudgetExceededError(BurlingError):
    """An operation refused to start or continue because it would exceed a
    configured resource bound."""
