"""Packing coloring verification and exact search."""

from lexpacking.solver.search import (
    PackingSearch,
    counting_lower_bound,
    default_budget,
    exact_chi_rho,
    find_coloring_with_k,
)
from lexpacking.solver.verify import greedy_coloring, verify_coloring

__all__ = [
    "PackingSearch",
    "counting_lower_bound",
    "default_budget",
    "exact_chi_rho",
    "find_coloring_with_k",
    "greedy_coloring",
    "verify_coloring",
]
