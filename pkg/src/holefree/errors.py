"""Exception types shared across the solver."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapacityExceededError(RuntimeError):
    """An enumeration passed its configured cap; carries the partial count."""

    def __init__(self, what: str, cap: int, count: int):
        super().__init__(f"{what}: cap {cap} exceeded ({count} found so far)")
        self.what = what
        self.cap = cap
        self.count = count


class OracleLimitError(ValueError):
    """A brute-force oracle was asked to run above its size limit."""


class PreconditionError(ValueError):
    """A documented precondition does not hold for the given input."""


class WitnessNotFoundError(RuntimeError):
    """A witness guaranteed for long-hole-free inputs could not be built.

    Raised only when the input violates the class assumption (or an
    internal invariant broke); carries diagnostics for the caller.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class NoDominationError(RuntimeError):
    """No vertex set of size at most three dominates the given set."""


class WidthLimitError(RuntimeError):
    """A tree decomposition bag is too large for the subset DP."""


class GenerationError(RuntimeError):
    """An instance generator exhausted its retry budget."""


class SolverInvariantError(RuntimeError):
    """An internal result failed its own soundness check."""
