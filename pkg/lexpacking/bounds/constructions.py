"""Layer-by-layer packing colorings of lexicographic products.

Both constructions put color 1 on ``A_G x A_H`` (an independent set of the
product of maximum size) and give each remaining repeated color a G-layer of
its own. Whatever is left gets a singleton color.
"""

from __future__ import annotations

import logging

from lexpacking.bounds.formulas import path_upper_bound, spaced_count, upper_bound_lex
from lexpacking.graphs.distances import all_pairs_distances
from lexpacking.graphs.independence import independence_number, packing_number
from lexpacking.models.bounds import ConstructionPlan, LayerAssignment
from lexpacking.models.coloring import PackingColoring
from lexpacking.models.graph import Graph
from lexpacking.products.lexicographic import product_alpha_set

logger = logging.getLogger(__name__)


def layered_plan(g_graph: Graph, h_graph: Graph) -> ConstructionPlan:
    """Colors ``2..k+1`` on packing witnesses of G inside the layers outside ``A_H``.

    The smallest color goes to the lowest-index free layer.
    """
    report = upper_bound_lex(g_graph, h_graph)
    n_h = h_graph.n
    _, color_one = product_alpha_set(g_graph, h_graph)
    _, a_h = independence_number(h_graph)
    free_layers = [h for h in range(n_h) if h not in a_h]
    distances = all_pairs_distances(g_graph)

    assignments = []
    for color, layer in zip(range(2, len(free_layers) + 2), free_layers):
        _, witness = packing_number(g_graph, color, distances)
        assignments.append(
            LayerAssignment(
                color=color,
                layer=layer,
                vertices=[g * n_h + layer for g in witness.members],
            )
        )
    logger.debug("layered plan: %d layer colors, bound %d", len(assignments), report.value)
    return ConstructionPlan(
        n_g=g_graph.n,
        n_h=n_h,
        color_one=list(color_one.members),
        assignments=assignments,
    )


def layered_coloring(g_graph: Graph, h_graph: Graph) -> PackingColoring:
    return layered_plan(g_graph, h_graph).to_coloring()


def path_layered_plan(n: int, h_graph: Graph) -> ConstructionPlan:
    """Layered plan for ``P_n o H`` that also reuses the layers of ``A_H``.

    Color 1 takes the even path indices in the layers of ``A_H``. The free
    layers get colors ``2..k+1`` on the evenly spread witnesses
    ``0, i+1, 2(i+1), ...``. Each layer of ``A_H`` then takes one of the colors
    ``j = k+2..|H|+1`` on the odd indices ``1, 1+p_j, 1+2p_j, ...`` with
    ``p_j = 2*(j//2) + 2``.
    """
    report = path_upper_bound(n, h_graph)
    n_h = h_graph.n
    _, a_h = independence_number(h_graph)
    free_layers = [h for h in range(n_h) if h not in a_h]
    k = len(free_layers)

    color_one = [g * n_h + h for g in range(0, n, 2) for h in a_h.members]
    assignments = [
        LayerAssignment(
            color=color,
            layer=layer,
            vertices=[g * n_h + layer for g in range(0, n, color + 1)],
        )
        for color, layer in zip(range(2, k + 2), free_layers)
    ]

    spacing: dict[int, int] = {}
    counts: dict[int, int] = {}
    for color, layer in zip(range(k + 2, n_h + 2), a_h.members):
        gap = 2 * (color // 2) + 2
        count = spaced_count(n, color)
        spacing[color] = gap
        counts[color] = count
        assignments.append(
            LayerAssignment(
                color=color,
                layer=layer,
                vertices=[(1 + s * gap) * n_h + layer for s in range(count)],
            )
        )
    logger.debug("path plan for n=%d: bound %d", n, report.value)
    return ConstructionPlan(
        n_g=n,
        n_h=n_h,
        color_one=color_one,
        assignments=assignments,
        spacing=spacing,
        counts=counts,
    )


def path_layered_coloring(n: int, h_graph: Graph) -> PackingColoring:
    return path_layered_plan(n, h_graph).to_coloring()
