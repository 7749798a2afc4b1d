"""
lexpacking: packing chromatic numbers of lexicographic graph products

Exact packing numbers and packing colorings for small graphs, the closed-form
bounds for ``G o H`` and the layered colorings that realise them.
"""

__version__ = "0.1.0"

from lexpacking.bounds import (
    exact_value,
    layered_coloring,
    lower_bound_lex,
    path_layered_coloring,
    path_upper_bound,
    upper_bound_lex,
)
from lexpacking.graphs import generate, independence_number, packing_number
from lexpacking.models import BoundReport, Graph, PackingColoring, SolveResult
from lexpacking.products import lex_product
from lexpacking.solver import exact_chi_rho, find_coloring_with_k, verify_coloring

__all__ = [
    "exact_value",
    "layered_coloring",
    "lower_bound_lex",
    "path_layered_coloring",
    "path_upper_bound",
    "upper_bound_lex",
    "generate",
    "independence_number",
    "packing_number",
    "BoundReport",
    "Graph",
    "PackingColoring",
    "SolveResult",
    "lex_product",
    "exact_chi_rho",
    "find_coloring_with_k",
    "verify_coloring",
]
