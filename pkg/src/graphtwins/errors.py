"""Exception types shared across the package."""

from __future__ import annotations


class GraphParseError(ValueError):
    """Malformed edge-list input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OracleCapError(ValueError):
    """Instance too large for exhaustive search."""


class PreconditionError(ValueError):
    """Input does not meet the documented precondition of a construction."""


class ConstructionError(RuntimeError):
    """A construction could not produce its witness (e.g. no balanced halving)."""


class InternalInvariantError(AssertionError):
    """A proven invariant failed at runtime. Always a bug."""
