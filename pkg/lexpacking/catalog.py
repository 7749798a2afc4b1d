"""Named factor graphs and small connected graphs for sweeps.

Small graphs come from the networkx graph atlas, which lists every graph on at
most seven vertices up to isomorphism.
"""

from __future__ import annotations

from typing import Iterator

import networkx as nx

from lexpacking.errors import PreconditionError
from lexpacking.graphs.core import from_edge_list, generate
from lexpacking.models.graph import Graph

ATLAS_MAX_ORDER = 7

FACTOR_LABELS: tuple[str, ...] = (
    "path:2",
    "path:3",
    "path:4",
    "path:5",
    "path:6",
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "complete:2",
    "complete:3",
    "complete:4",
    "complete:5",
    "empty:2",
    "empty:3",
)


def factor_catalog(include_edgeless: bool = True) -> dict[str, Graph]:
    """Small factor graphs keyed by their family label."""
    labels = [
        label for label in FACTOR_LABELS if include_edgeless or not label.startswith("empty")
    ]
    return {label: generate(label) for label in labels}


def from_networkx(graph: nx.Graph) -> Graph:
    """Relabel nodes to ``0..n-1`` in sorted order and convert."""
    nodes = sorted(graph.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    return from_edge_list(len(nodes), [(index[u], index[v]) for u, v in graph.edges])


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def connected_graphs(min_order: int = 1, max_order: int = 5) -> Iterator[tuple[str, Graph]]:
    """Every connected graph with ``min_order <= n <= max_order``, labelled ``atlas:<index>``."""
    if max_order > ATLAS_MAX_ORDER:
        raise PreconditionError(
            f"the graph atlas stops at {ATLAS_MAX_ORDER} vertices, got max_order={max_order}",
            reason=f"max_order <= {ATLAS_MAX_ORDER}",
        )
    for index, graph in enumerate(nx.graph_atlas_g()):
        order = graph.number_of_nodes()
        if order < max(min_order, 1) or order > max_order:
            continue
        if nx.is_connected(graph):
            yield f"atlas:{index}", from_networkx(graph)
