"""Data models for lexpacking."""

from lexpacking.models.graph import (
    UNREACHABLE,
    DistanceMatrix,
    FamilySpec,
    Graph,
    Unreachable,
    VertexSet,
    distance_label,
    iter_bits,
    mask_of,
)
from lexpacking.models.coloring import (
    PackingColoring,
    SearchResult,
    SearchStatus,
    SolverBudget,
    SolveResult,
    SolveStatus,
    VerificationReport,
    Violation,
)
from lexpacking.models.bounds import (
    BoundReport,
    BoundTerms,
    Certificate,
    ConstructionPlan,
    Exactness,
    IndexedTerm,
    LayerAssignment,
    SweepSummary,
)
from lexpacking.models.reports import ExitCode, GraphSpec, RunReport, parse_family

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "FamilySpec",
    "Graph",
    "Unreachable",
    "VertexSet",
    "distance_label",
    "iter_bits",
    "mask_of",
    "PackingColoring",
    "SearchResult",
    "SearchStatus",
    "SolverBudget",
    "SolveResult",
    "SolveStatus",
    "VerificationReport",
    "Violation",
    "BoundReport",
    "BoundTerms",
    "Certificate",
    "ConstructionPlan",
    "Exactness",
    "IndexedTerm",
    "LayerAssignment",
    "SweepSummary",
    "ExitCode",
    "GraphSpec",
    "RunReport",
    "parse_family",
]
