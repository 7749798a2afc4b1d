"""Graph, distance and vertex-set models.

Graphs are stored as bitset adjacency rows: bit ``u`` of ``adjacency[v]`` is set
iff ``u`` and ``v`` are adjacent. Python ints make neighbourhood intersections
and popcounts cheap, which the exact searches rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from lexpacking.errors import GraphFormatError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@total_ordering
class Unreachable:
    """Distance between vertices in different components.

    Compares greater than every finite distance. Arithmetic is refused so an
    infinite distance can never leak into a sum.
    """

    _instance: Optional["Unreachable"] = None

    def __new__(cls) -> "Unreachable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("UNREACHABLE")

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def _refuse(self, *_: object) -> "Unreachable":
        raise TypeError("arithmetic on an UNREACHABLE distance")

    __add__ = __radd__ = __sub__ = __rsub__ = _refuse
    __mul__ = __rmul__ = __floordiv__ = __rfloordiv__ = _refuse
    __truediv__ = __rtruediv__ = __neg__ = _refuse

    def __index__(self) -> int:
        raise TypeError("UNREACHABLE has no integer value")


UNREACHABLE = Unreachable()

Distance = Union[int, Unreachable]


def distance_label(value: Distance) -> Union[int, Literal["unreachable"]]:
    """JSON-friendly rendering of an extended distance."""
    return "unreachable" if value is UNREACHABLE else int(value)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise GraphFormatError(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full or row < 0:
                raise GraphFormatError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphFormatError(f"self-loop at vertex {v}", edge=(v, v))
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise GraphFormatError(f"adjacency is not symmetric on ({v}, {u})")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        pairs = []
        for u in range(self.n):
            later = self.adjacency[u] >> (u + 1) << (u + 1)
            pairs.extend((u, v) for v in iter_bits(later))
        return pairs


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a graph.

    ``balls[v][r]`` is the bitset of vertices at distance at most ``r`` from
    ``v``; the last entry is the whole component of ``v``.
    """

    n: int
    rows: tuple[tuple[Distance, ...], ...]
    balls: tuple[tuple[int, ...], ...] = field(repr=False)

    def dist(self, u: int, v: int) -> Distance:
        return self.rows[u][v]

    def ball(self, v: int, radius: int) -> int:
        """Vertices within ``radius`` of ``v`` (``v`` included)."""
        layers = self.balls[v]
        if radius >= len(layers):
            return layers[-1]
        return layers[radius]

    def component(self, v: int) -> int:
        """Bitset of the connected component of ``v``."""
        return self.balls[v][-1]

    def eccentricity(self, v: int) -> Distance:
        """Largest distance from ``v``; UNREACHABLE when ``v`` misses part of the graph."""
        if self.component(v) != (1 << self.n) - 1:
            return UNREACHABLE
        return len(self.balls[v]) - 1

    def has_neighbor(self, v: int) -> bool:
        return len(self.balls[v]) > 1

    @property
    def connected(self) -> bool:
        return self.component(0) == (1 << self.n) - 1

    @property
    def diameter(self) -> Distance:
        if not self.connected:
            return UNREACHABLE
        return max(int(self.eccentricity(v)) for v in range(self.n))

    @property
    def max_finite_distance(self) -> int:
        return max(len(layers) - 1 for layers in self.balls)


class VertexSet(BaseModel):
    """A subset of the vertices of an ``n``-vertex graph, kept sorted."""

    n: int = Field(ge=1)
    members: tuple[int, ...] = ()

    @field_validator("members")
    @classmethod
    def _sorted_unique(cls, members: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sorted(set(members)))

    @model_validator(mode="after")
    def _check_range(self) -> "VertexSet":
        if self.members and (self.members[0] < 0 or self.members[-1] >= self.n):
            raise ValueError(f"members must lie in 0..{self.n - 1}")
        return self

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        return cls(n=n, members=tuple(iter_bits(mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.members


FamilyName = Literal["path", "cycle", "complete", "empty", "petersen"]

FAMILY_NAMES: tuple[str, ...] = ("path", "cycle", "complete", "empty", "petersen")


class FamilySpec(BaseModel):
    """A standard graph family with its size, e.g. ``path:8`` or ``petersen``."""

    family: FamilyName
    n: int = Field(default=10, ge=1)

    @property
    def label(self) -> str:
        return "petersen" if self.family == "petersen" else f"{self.family}:{self.n}"
