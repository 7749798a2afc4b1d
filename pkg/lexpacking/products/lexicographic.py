"""Lexicographic products ``G o H`` with layer bookkeeping.

Vertex ``(g, h)`` has flat index ``g * |H| + h``, so each H-layer is a
contiguous block of indices and the G-layer through ``h`` is the residue class
``h`` modulo ``|H|``.
"""

from __future__ import annotations

from dataclasses import dataclass

from lexpacking.graphs.independence import independence_number
from lexpacking.models.graph import Distance, DistanceMatrix, Graph, VertexSet, iter_bits


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    n_g: int
    n_h: int

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.n_g and 0 <= h < self.n_h):
            raise IndexError(f"({g}, {h}) is outside {self.n_g} x {self.n_h}")
        return g * self.n_h + h

    def coordinates(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.graph.n:
            raise IndexError(f"vertex {v} is outside 0..{self.graph.n - 1}")
        g, h = divmod(v, self.n_h)
        return g, h

    def g_layer(self, h: int) -> VertexSet:
        """``G^h``: the copy of G through ``h``."""
        return VertexSet(n=self.graph.n, members=tuple(self.index(g, h) for g in range(self.n_g)))

    def h_layer(self, g: int) -> VertexSet:
        """``H^g``: the copy of H through ``g``."""
        return VertexSet(n=self.graph.n, members=tuple(self.index(g, h) for h in range(self.n_h)))


def lex_product(g_graph: Graph, h_graph: Graph) -> ProductGraph:
    """``(g1,h1) ~ (g2,h2)`` iff ``g1 ~ g2``, or ``g1 = g2`` and ``h1 ~ h2``."""
    n_h = h_graph.n
    block = (1 << n_h) - 1
    rows: list[int] = []
    for g in range(g_graph.n):
        across = 0
        for other in iter_bits(g_graph.adjacency[g]):
            across |= block << (other * n_h)
        offset = g * n_h
        rows.extend(across | (h_graph.adjacency[h] << offset) for h in range(n_h))
    product = Graph(n=g_graph.n * n_h, adjacency=tuple(rows))
    return ProductGraph(graph=product, n_g=g_graph.n, n_h=n_h)


def lex_distance(
    g_distances: DistanceMatrix,
    h_distances: DistanceMatrix,
    first: tuple[int, int],
    second: tuple[int, int],
) -> Distance:
    """Product distance from the factor distances.

    Different G-coordinates keep the G distance. Inside one H-layer the
    distance is cut to 2 by a detour through a neighbouring layer; without a
    G-neighbour (e.g. ``|G| = 1``) no detour exists and the H distance stands.
    """
    (g1, h1), (g2, h2) = first, second
    for g in (g1, g2):
        if not 0 <= g < g_distances.n:
            raise IndexError(f"G-coordinate {g} is outside 0..{g_distances.n - 1}")
    for h in (h1, h2):
        if not 0 <= h < h_distances.n:
            raise IndexError(f"H-coordinate {h} is outside 0..{h_distances.n - 1}")

    if g1 != g2:
        return g_distances.dist(g1, g2)
    within = h_distances.dist(h1, h2)
    if not g_distances.has_neighbor(g1):
        return within
    return min(2, within)


def product_alpha_set(g_graph: Graph, h_graph: Graph) -> tuple[int, VertexSet]:
    """``alpha(G o H) = alpha(G) * alpha(H)`` with witness ``A_G x A_H``."""
    alpha_g, set_g = independence_number(g_graph)
    alpha_h, set_h = independence_number(h_graph)
    n_h = h_graph.n
    members = tuple(g * n_h + h for g in set_g.members for h in set_h.members)
    return alpha_g * alpha_h, VertexSet(n=g_graph.n * n_h, members=members)
