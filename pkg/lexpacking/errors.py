"""Exception hierarchy for lexpacking."""

from __future__ import annotations

from typing import Optional


class LexPackingError(Exception):
    """Base class for all library errors."""


class GraphFormatError(LexPackingError, ValueError):
    """A graph could not be built from the given vertices, edges or text."""

    def __init__(
        self,
        message: str,
        edge: Optional[tuple[int, int]] = None,
        line: Optional[int] = None,
    ) -> None:
        super().__init__(message)
        self.edge = edge
        self.line = line


class UnknownFamilyError(GraphFormatError):
    """Unknown graph family or invalid family size."""


class DisconnectedGraphError(LexPackingError, ValueError):
    """An operation that needs a finite diameter received a disconnected graph."""


class PreconditionError(LexPackingError, ValueError):
    """A bound formula or construction was called outside its hypotheses."""

    def __init__(self, message: str, reason: str = "") -> None:
        super().__init__(message)
        self.reason = reason or message


class ColoringError(LexPackingError, ValueError):
    """A coloring does not fit its graph or could not be parsed."""


class ConfigError(LexPackingError, ValueError):
    """Invalid configuration value."""
