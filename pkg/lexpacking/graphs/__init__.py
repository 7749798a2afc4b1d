"""Graph construction, distances and exact packing numbers."""

from lexpacking.graphs.core import (
    from_edge_list,
    generate,
    is_complete,
    is_edgeless,
    is_path_graph,
    load_graph,
)
from lexpacking.graphs.distances import (
    all_pairs_distances,
    diameter,
    is_connected,
    power_graph,
)
from lexpacking.graphs.edgelist import (
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from lexpacking.graphs.independence import (
    clique_cover_size,
    independence_number,
    maximum_independent_sets,
    maximum_packings,
    packing_number,
)

__all__ = [
    "from_edge_list",
    "generate",
    "is_complete",
    "is_edgeless",
    "is_path_graph",
    "load_graph",
    "all_pairs_distances",
    "diameter",
    "is_connected",
    "power_graph",
    "format_edge_list",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "clique_cover_size",
    "independence_number",
    "maximum_independent_sets",
    "maximum_packings",
    "packing_number",
]
