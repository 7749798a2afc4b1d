"""Exact maximum independent sets and t-packings.

Branch and bound over bitsets: vertices of degree at most one are taken
greedily, the remaining candidates are bounded by a greedy clique cover, and
the search branches on a highest-degree candidate (lowest index on ties),
first including it and then discarding it.
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

from lexpacking.errors import PreconditionError
from lexpacking.graphs.distances import power_graph
from lexpacking.models.graph import DistanceMatrix, Graph, VertexSet, iter_bits

logger = logging.getLogger(__name__)


def clique_cover_size(adjacency: tuple[int, ...] | list[int], candidates: int) -> int:
    """Number of cliques in a greedy cover of ``candidates``.

    Any independent subset of ``candidates`` meets each clique at most once, so
    this bounds the independence number of the induced subgraph.
    """
    count = 0
    remaining = candidates
    while remaining:
        low = remaining & -remaining
        remaining ^= low
        common = adjacency[low.bit_length() - 1] & remaining
        while common:
            bit = common & -common
            remaining ^= bit
            common &= adjacency[bit.bit_length() - 1]
        count += 1
    return count


class _MaximumIndependentSet:
    def __init__(self, graph: Graph) -> None:
        self.adjacency = graph.adjacency
        self.best_size = 0
        self.best_mask = 0
        self.nodes = 0

    def _greedy_seed(self, candidates: int) -> None:
        chosen = 0
        while candidates:
            v = min(
                iter_bits(candidates),
                key=lambda u: ((self.adjacency[u] & candidates).bit_count(), u),
            )
            chosen |= 1 << v
            candidates &= ~(self.adjacency[v] | (1 << v))
        self.best_mask = chosen
        self.best_size = chosen.bit_count()

    def solve(self, candidates: int) -> tuple[int, int]:
        self._greedy_seed(candidates)
        self._expand(candidates, 0, 0)
        return self.best_size, self.best_mask

    def _expand(self, candidates: int, chosen: int, size: int) -> None:
        self.nodes += 1
        adjacency = self.adjacency
        reduced = True
        while reduced:
            reduced = False
            for v in iter_bits(candidates):
                around = adjacency[v] & candidates
                if around & (around - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    candidates &= ~(around | (1 << v))
                    reduced = True
                    break

        if not candidates:
            if size > self.best_size:
                self.best_size = size
                self.best_mask = chosen
            return
        if size + clique_cover_size(adjacency, candidates) <= self.best_size:
            return

        pivot = -1
        pivot_degree = -1
        for v in iter_bits(candidates):
            degree = (adjacency[v] & candidates).bit_count()
            if degree > pivot_degree:
                pivot, pivot_degree = v, degree
        bit = 1 << pivot
        self._expand(candidates & ~(adjacency[pivot] | bit), chosen | bit, size + 1)
        self._expand(candidates & ~bit, chosen, size)


def independence_number(graph: Graph) -> tuple[int, VertexSet]:
    """Exact ``alpha(G)`` with a deterministic witness set."""
    search = _MaximumIndependentSet(graph)
    size, mask = search.solve(graph.vertex_mask)
    logger.debug("independence number %d on %d vertices (%d nodes)", size, graph.n, search.nodes)
    return size, VertexSet.from_mask(graph.n, mask)


def packing_number(
    graph: Graph, t: int, distances: Optional[DistanceMatrix] = None
) -> tuple[int, VertexSet]:
    """Exact ``rho_t(G)``: the independence number of the t-th distance power."""
    if t < 1:
        raise PreconditionError(f"packing order must be positive, got t={t}")
    if t == 1:
        return independence_number(graph)
    return independence_number(power_graph(graph, t, distances))


def maximum_independent_sets(graph: Graph) -> Iterator[VertexSet]:
    """Every maximum independent set, each exactly once, in a fixed order."""
    target, _ = independence_number(graph)
    adjacency = graph.adjacency

    def walk(candidates: int, chosen: int, size: int) -> Iterator[int]:
        if size + clique_cover_size(adjacency, candidates) < target:
            return
        if not candidates:
            yield chosen
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        yield from walk(candidates & ~(adjacency[v] | low), chosen | low, size + 1)
        yield from walk(candidates & ~low, chosen, size)

    for mask in walk(graph.vertex_mask, 0, 0):
        yield VertexSet.from_mask(graph.n, mask)


def maximum_packings(
    graph: Graph, t: int, distances: Optional[DistanceMatrix] = None
) -> Iterator[VertexSet]:
    """Every maximum t-packing of ``graph``."""
    if t < 1:
        raise PreconditionError(f"packing order must be positive, got t={t}")
    target = graph if t == 1 else power_graph(graph, t, distances)
    return maximum_independent_sets(target)
