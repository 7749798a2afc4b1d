"""Breadth-first distances, diameters and distance powers."""

from __future__ import annotations

from lexpacking.errors import PreconditionError
from lexpacking.models.graph import UNREACHABLE, Distance, DistanceMatrix, Graph, iter_bits


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """Hop distances from every vertex, level by level on bitset frontiers."""
    rows: list[tuple[Distance, ...]] = []
    balls: list[tuple[int, ...]] = []
    adjacency = graph.adjacency
    for source in range(graph.n):
        row: list[Distance] = [UNREACHABLE] * graph.n
        row[source] = 0
        seen = frontier = 1 << source
        levels = [seen]
        depth = 0
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= adjacency[v]
            reached &= ~seen
            if not reached:
                break
            depth += 1
            for v in iter_bits(reached):
                row[v] = depth
            seen |= reached
            levels.append(seen)
            frontier = reached
        rows.append(tuple(row))
        balls.append(tuple(levels))
    return DistanceMatrix(n=graph.n, rows=tuple(rows), balls=tuple(balls))


def diameter(graph: Graph) -> Distance:
    """Largest distance; ``UNREACHABLE`` when disconnected, 0 for one vertex."""
    return all_pairs_distances(graph).diameter


def is_connected(graph: Graph) -> bool:
    return all_pairs_distances(graph).connected


def power_graph(graph: Graph, t: int, distances: DistanceMatrix | None = None) -> Graph:
    """Same vertices, ``u ~ v`` iff ``0 < d(u, v) <= t``.

    A set is a t-packing of ``graph`` exactly when it is independent here.
    """
    if t < 1:
        raise PreconditionError(f"power must be positive, got t={t}")
    distances = distances or all_pairs_distances(graph)
    rows = tuple(distances.ball(v, t) & ~(1 << v) for v in range(graph.n))
    return Graph(n=graph.n, adjacency=rows)
