"""Bound formulas, layered constructions and certification sweeps."""

from lexpacking.bounds.certify import certify_pair, summarize, sweep
from lexpacking.bounds.constructions import (
    layered_coloring,
    layered_plan,
    path_layered_coloring,
    path_layered_plan,
)
from lexpacking.bounds.formulas import (
    endpoint_forcing_order,
    exact_value,
    has_endpoint_forcing,
    lower_bound_lex,
    path_complete_upper_bound,
    path_upper_bound,
    repeatable_class_count,
    spaced_count,
    upper_bound_lex,
)

__all__ = [
    "certify_pair",
    "summarize",
    "sweep",
    "layered_coloring",
    "layered_plan",
    "path_layered_coloring",
    "path_layered_plan",
    "endpoint_forcing_order",
    "exact_value",
    "has_endpoint_forcing",
    "lower_bound_lex",
    "path_complete_upper_bound",
    "path_upper_bound",
    "repeatable_class_count",
    "spaced_count",
    "upper_bound_lex",
]
