"""Check the closed-form bounds against the exact solver on small products."""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, Optional

from lexpacking.bounds.formulas import (
    exact_value,
    lower_bound_lex,
    path_upper_bound,
    upper_bound_lex,
)
from lexpacking.catalog import connected_graphs
from lexpacking.errors import PreconditionError
from lexpacking.graphs.core import is_path_graph
from lexpacking.models.bounds import BoundReport, Certificate, SweepSummary
from lexpacking.models.coloring import SolverBudget
from lexpacking.models.graph import Graph
from lexpacking.products.lexicographic import lex_product
from lexpacking.solver.search import exact_chi_rho

logger = logging.getLogger(__name__)


def certify_pair(
    g_graph: Graph,
    h_graph: Graph,
    budget: Optional[SolverBudget] = None,
    g_label: str = "G",
    h_label: str = "H",
) -> Certificate:
    """Evaluate every applicable bound for ``G o H`` and solve the product exactly."""
    lower = lower_bound_lex(g_graph, h_graph)
    upper: Optional[BoundReport] = None
    upper_error: Optional[str] = None
    try:
        upper = upper_bound_lex(g_graph, h_graph)
    except PreconditionError as exc:
        upper_error = exc.reason
    path_upper: Optional[BoundReport] = None
    if is_path_graph(g_graph):
        try:
            path_upper = path_upper_bound(g_graph.n, h_graph)
        except PreconditionError:
            logger.debug("no path bound for %s o %s", g_label, h_label)
    exact = exact_value(g_graph, h_graph)

    product = lex_product(g_graph, h_graph)
    solved = exact_chi_rho(product.graph, budget)
    chi = solved.best.k
    certificate = Certificate(
        g_label=g_label,
        h_label=h_label,
        order=product.graph.n,
        lower=lower,
        upper=upper,
        upper_error=upper_error,
        path_upper=path_upper,
        exact_formula=exact,
        chi_rho=chi,
        optimal=solved.optimal,
        explored=solved.explored,
        elapsed_seconds=solved.elapsed_seconds,
    )
    if solved.optimal:
        best_upper = certificate.best_upper
        certificate.sandwich_ok = lower.value <= chi and (best_upper is None or chi <= best_upper)
        certificate.tight = best_upper is not None and best_upper == chi
        if exact is not None:
            certificate.formula_agrees = exact.value == chi
    logger.info(
        "%s o %s: lower %d, chi_rho %d (%s)",
        g_label,
        h_label,
        lower.value,
        chi,
        "optimal" if solved.optimal else "timeout",
    )
    return certificate


def sweep(
    h_graphs: dict[str, Graph],
    min_order: int = 2,
    max_order: int = 5,
    max_product: int = 24,
    budget: Optional[SolverBudget] = None,
) -> Iterator[Certificate]:
    """Certify every connected G in the order range against each H, skipping large products."""
    for g_label, g_graph in connected_graphs(max(min_order, 2), max_order):
        for h_label, h_graph in h_graphs.items():
            if g_graph.n * h_graph.n > max_product:
                continue
            yield certify_pair(g_graph, h_graph, budget, g_label, h_label)


def summarize(certificates: Iterable[Certificate]) -> SweepSummary:
    summary = SweepSummary()
    for cert in certificates:
        name = f"{cert.g_label} o {cert.h_label}"
        summary.instances += 1
        if not cert.optimal:
            summary.unsolved.append(name)
            continue
        summary.solved += 1
        if cert.formula_agrees is None:
            continue
        summary.formula_instances += 1
        if cert.formula_agrees:
            summary.agreements += 1
        else:
            summary.disagreements.append(name)
    return summary
