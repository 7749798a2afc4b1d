"""Graph construction: edge lists, standard families and simple predicates."""

from __future__ import annotations

from typing import Iterable, Union

from lexpacking.errors import GraphFormatError, UnknownFamilyError
from lexpacking.models.graph import FamilySpec, Graph
from lexpacking.models.reports import GraphSpec, parse_family


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``0..n-1``; duplicate edges collapse."""
    if n < 1:
        raise GraphFormatError(f"a graph needs at least one vertex, got n={n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}", (u, v))
        if u == v:
            raise GraphFormatError(f"self-loop ({u}, {v}) is not allowed", (u, v))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n=n, adjacency=tuple(rows))


def _petersen_edges() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def generate(spec: Union[FamilySpec, str]) -> Graph:
    """Standard graph of a family with canonical numbering.

    Paths run ``0-1-...-(n-1)`` and cycles close ``n-1`` back to ``0``.
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    n = spec.n
    if spec.family == "path":
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if spec.family == "cycle":
        if n < 3:
            raise UnknownFamilyError(f"cycle needs n >= 3, got {n}")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if spec.family == "complete":
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if spec.family == "empty":
        return from_edge_list(n, [])
    if spec.family == "petersen":
        return from_edge_list(10, _petersen_edges())
    raise UnknownFamilyError(f"unknown graph family {spec.family!r}")


def load_graph(spec: Union[GraphSpec, str]) -> Graph:
    """Resolve a CLI graph spec to a graph (family or edge-list file)."""
    from lexpacking.graphs.edgelist import read_edge_list

    if isinstance(spec, str):
        spec = GraphSpec.parse(spec)
    if spec.family is not None:
        return generate(spec.family)
    assert spec.path is not None
    return read_edge_list(spec.path)


def is_complete(graph: Graph) -> bool:
    """All pairs adjacent; ``K1`` counts as complete."""
    full = graph.vertex_mask
    return all(row | (1 << v) == full for v, row in enumerate(graph.adjacency))


def is_edgeless(graph: Graph) -> bool:
    """No pair adjacent; ``K1`` counts as edgeless."""
    return not any(graph.adjacency)


def is_path_graph(graph: Graph) -> bool:
    """True iff the graph is ``P_n`` with the canonical numbering ``0-1-...-(n-1)``."""
    return graph.edges() == [(i, i + 1) for i in range(graph.n - 1)]
