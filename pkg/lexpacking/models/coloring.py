"""Packing coloring and solver result models."""

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class PackingColoring(BaseModel):
    """Vertex-indexed colors ``1..k``; color class ``i`` must be an i-packing.

    Validity against a graph is checked by ``verify_coloring``, never assumed.
    """

    model_config = ConfigDict(
        json_schema_extra={"example": {"n": 4, "k": 3, "colors": [1, 2, 1, 3]}}
    )

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    colors: list[int]

    @model_validator(mode="after")
    def _check_shape(self) -> "PackingColoring":
        if len(self.colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(self.colors)}")
        bad = [c for c in self.colors if c < 1]
        if bad:
            raise ValueError(f"colors must be positive integers, got {bad[0]}")
        if max(self.colors) != self.k:
            raise ValueError(f"k={self.k} does not match the largest color {max(self.colors)}")
        return self

    @classmethod
    def from_colors(cls, colors: list[int]) -> "PackingColoring":
        return cls(n=len(colors), k=max(colors) if colors else 1, colors=list(colors))

    def color_class(self, color: int) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == color]

    def class_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for c in self.colors:
            sizes[c] = sizes.get(c, 0) + 1
        return dict(sorted(sizes.items()))


class Violation(BaseModel):
    """Two vertices sharing color ``color`` at distance at most ``color``."""

    u: int
    v: int
    color: int
    distance: int


class VerificationReport(BaseModel):
    valid: bool
    violation: Optional[Violation] = None


class SolverBudget(BaseModel):
    """Wall-clock and node limits for one solver call; ``None`` means unlimited."""

    seconds: Optional[float] = Field(default=60.0, gt=0)
    nodes: Optional[int] = Field(default=None, gt=0)


class SearchStatus(str, Enum):
    FOUND = "found"
    NONE = "none"
    TIMEOUT = "timeout"


class SearchResult(BaseModel):
    """Outcome of one decision run with a fixed number of colors.

    ``coloring`` is set only for FOUND. A TIMEOUT carries ``incumbent``, the best
    complete coloring known when the budget ran out; it may use more than ``k`` colors.
    """

    k: int
    status: SearchStatus
    coloring: Optional[PackingColoring] = None
    incumbent: Optional[PackingColoring] = None
    explored: int = 0
    elapsed_seconds: float = 0.0


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    TIMEOUT = "timeout"


class SolveResult(BaseModel):
    """Best coloring found by the exact solver.

    When ``optimal`` is set, ``best.k`` is the packing chromatic number.
    """

    best: PackingColoring
    optimal: bool
    status: SolveStatus
    lower_bound: int
    explored: int = 0
    elapsed_seconds: float = 0.0
    decisions: list[SearchResult] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_optimality(self) -> "SolveResult":
        if self.optimal and self.best.k < self.lower_bound:
            raise ValueError("an optimal coloring cannot beat the lower bound")
        return self
