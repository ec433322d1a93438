"""Exception types shared across the package."""

from __future__ import annotations


class FsplitError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(FsplitError):
    """Raised when operands live in different rings."""


class ParseError(FsplitError):
    """Raised on malformed input text, with 1-based line and column."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = "line %d, col %d: %s" % (line, col, message)
        super().__init__(message)
        self.line = line
        self.col = col


class PreconditionError(FsplitError):
    """Raised when input data violates a documented precondition."""


class BudgetError(PreconditionError):
    """Raised when a requested enumeration exceeds its size budget."""


class EngineError(FsplitError):
    """Raised when an internal certificate or bound fails mid-run."""
