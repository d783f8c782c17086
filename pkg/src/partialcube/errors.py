"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph file; remembers the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    """Raised by metric-layer operations on disconnected graphs."""


class BoundExceededError(ValueError):
    """Input too large for an exhaustive (oracle or isomorphism) routine."""


class NotPartialCubeError(ValueError):
    """Operation requires a partial cube; carries the recognizer's witness."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class ConstructionError(ValueError):
    """Invalid parameters for a graph builder or transformer."""
