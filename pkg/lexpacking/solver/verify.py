"""Packing coloring verification and a greedy first-fit coloring."""

from __future__ import annotations

from typing import Optional, Sequence

from lexpacking.errors import ColoringError
from lexpacking.graphs.distances import all_pairs_distances
from lexpacking.models.coloring import PackingColoring, VerificationReport, Violation
from lexpacking.models.graph import DistanceMatrix, Graph, iter_bits, mask_of


def verify_coloring(
    graph: Graph, coloring: PackingColoring, distances: Optional[DistanceMatrix] = None
) -> VerificationReport:
    """Check that every two vertices of color ``i`` are more than ``i`` apart.

    The reported violation is the first pair ``u < v`` in index order.
    """
    if coloring.n != graph.n:
        raise ColoringError(f"coloring covers {coloring.n} vertices, graph has {graph.n}")
    distances = distances or all_pairs_distances(graph)

    classes = {color: mask_of(coloring.color_class(color)) for color in coloring.class_sizes()}

    for u, color in enumerate(coloring.colors):
        later = classes[color] >> (u + 1) << (u + 1)
        clash = distances.ball(u, color) & later
        if clash:
            v = next(iter_bits(clash))
            distance = int(distances.dist(u, v))
            return VerificationReport(
                valid=False,
                violation=Violation(u=u, v=v, color=color, distance=distance),
            )
    return VerificationReport(valid=True)


def greedy_coloring(
    graph: Graph,
    distances: Optional[DistanceMatrix] = None,
    order: Optional[Sequence[int]] = None,
) -> PackingColoring:
    """First-fit: each vertex in turn takes the smallest color it may legally join."""
    distances = distances or all_pairs_distances(graph)
    order = range(graph.n) if order is None else order

    classes: list[int] = [0]
    colors = [0] * graph.n
    for v in order:
        color = 1
        while color < len(classes) and classes[color] & distances.ball(v, color):
            color += 1
        if color == len(classes):
            classes.append(0)
        classes[color] |= 1 << v
        colors[v] = color
    return PackingColoring.from_colors(colors)
