"""Closed-form bounds on the packing chromatic number of ``G o H``.

Every bound is reported with its terms: the product order, the size of the
color-1 class, the packing numbers of the classes that may repeat, the sizes
of the spaced classes of the path construction, and the number of classes
counted once.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from lexpacking.errors import DisconnectedGraphError, PreconditionError
from lexpacking.graphs.core import generate, is_complete, is_edgeless
from lexpacking.graphs.distances import all_pairs_distances
from lexpacking.graphs.independence import (
    independence_number,
    maximum_packings,
    packing_number,
)
from lexpacking.models.bounds import BoundReport, BoundTerms, Exactness, IndexedTerm
from lexpacking.models.graph import DistanceMatrix, FamilySpec, Graph

logger = logging.getLogger(__name__)

EDGELESS_FACTOR = (
    "H must have an edge unless diam(G) <= 2: the layered construction needs "
    "a layer outside the color-1 class"
)


@dataclass(frozen=True)
class _Factor:
    """A connected outer factor with its distances and diameter."""

    graph: Graph
    distances: DistanceMatrix
    diameter: int

    @classmethod
    def of(cls, graph: Graph, role: str = "G") -> "_Factor":
        if graph.n < 2:
            raise PreconditionError(
                f"{role} needs at least two vertices, got {graph.n}",
                reason=f"|{role}| >= 2",
            )
        distances = all_pairs_distances(graph)
        if not distances.connected:
            raise DisconnectedGraphError(f"{role} must be connected")
        return cls(graph=graph, distances=distances, diameter=int(distances.diameter))

    def packing_terms(self, first: int, last: int) -> list[IndexedTerm]:
        """``rho_i(G)`` for ``first <= i <= last``; empty when the range is."""
        terms = []
        for i in range(first, last + 1):
            if i >= self.diameter:
                value = 1
            else:
                value = packing_number(self.graph, i, self.distances)[0]
            terms.append(IndexedTerm(index=i, value=value))
        return terms


def repeatable_class_count(graph: Graph) -> int:
    """Number of color classes that may hold more than one vertex per H-layer.

    1 for a complete graph, ``diam(G) - 1`` otherwise.
    """
    distances = all_pairs_distances(graph)
    if not distances.connected:
        raise DisconnectedGraphError("d(G) is only defined for connected graphs")
    if is_complete(graph):
        return 1
    return int(distances.diameter) - 1


def lower_bound_lex(g_graph: Graph, h_graph: Graph) -> BoundReport:
    """``|G||H| - alpha(G)alpha(H) - sum_{i=2}^{diam(G)-1} rho_i(G) + d(G)``."""
    factor = _Factor.of(g_graph)
    alpha_g = independence_number(g_graph)[0]
    alpha_h = independence_number(h_graph)[0]
    d = repeatable_class_count(g_graph)
    terms = BoundTerms(
        order_product=g_graph.n * h_graph.n,
        alpha_product=alpha_g * alpha_h,
        packing_terms=factor.packing_terms(2, factor.diameter - 1),
        classes=d,
        parameters={"diameter": factor.diameter, "d": d, "alpha_g": alpha_g, "alpha_h": alpha_h},
    )
    return BoundReport(
        source="counting_lower", value=terms.total(), terms=terms, exactness=Exactness.LOWER
    )


def upper_bound_lex(g_graph: Graph, h_graph: Graph) -> BoundReport:
    """``|G||H| - alpha(G)alpha(H) - sum_{i=2}^{k+1} rho_i(G) + k + 1``, ``k = |H| - alpha(H)``.

    Raises PreconditionError for edgeless H unless ``diam(G) <= 2``.
    """
    factor = _Factor.of(g_graph)
    if is_edgeless(h_graph) and factor.diameter > 2:
        raise PreconditionError(
            f"H is edgeless and diam(G) = {factor.diameter} > 2", reason=EDGELESS_FACTOR
        )
    alpha_g = independence_number(g_graph)[0]
    alpha_h = independence_number(h_graph)[0]
    k = h_graph.n - alpha_h
    terms = BoundTerms(
        order_product=g_graph.n * h_graph.n,
        alpha_product=alpha_g * alpha_h,
        packing_terms=factor.packing_terms(2, k + 1),
        classes=k + 1,
        parameters={"diameter": factor.diameter, "k": k, "alpha_g": alpha_g, "alpha_h": alpha_h},
    )
    return BoundReport(
        source="layered_upper", value=terms.total(), terms=terms, exactness=Exactness.UPPER
    )


def exact_value(g_graph: Graph, h_graph: Graph) -> Optional[BoundReport]:
    """The exact packing chromatic number of ``G o H`` when a closed form applies.

    Regimes are tried in order: complete G, diameter two, diameter three with H
    not edgeless, and ``|H| - alpha(H) >= diam(G) - 1`` with H not edgeless.
    Returns None when none applies.
    """
    factor = _Factor.of(g_graph)
    diam = factor.diameter
    alpha_g = independence_number(g_graph)[0]
    alpha_h = independence_number(h_graph)[0]
    k = h_graph.n - alpha_h
    edgeless_h = is_edgeless(h_graph)
    parameters = {"diameter": diam, "k": k, "alpha_g": alpha_g, "alpha_h": alpha_h}
    order = g_graph.n * h_graph.n
    packing: list[IndexedTerm]

    if diam == 1:
        source, packing, classes = "exact_complete_factor", [], 1
    elif diam == 2:
        source, packing, classes = "exact_diameter_two", [], 1
    elif diam == 3 and not edgeless_h:
        source, packing, classes = "exact_diameter_three", factor.packing_terms(2, 2), 2
    elif k >= diam - 1 and not edgeless_h:
        source, classes = "exact_layer_surplus", diam - 1
        packing = factor.packing_terms(2, diam - 1)
    else:
        logger.debug("no closed form for diam(G)=%d, k=%d", diam, k)
        return None

    terms = BoundTerms(
        order_product=order,
        alpha_product=alpha_g * alpha_h,
        packing_terms=packing,
        classes=classes,
        parameters=parameters,
    )
    return BoundReport(source=source, value=terms.total(), terms=terms, exactness=Exactness.EXACT)


def spaced_count(n: int, j: int) -> int:
    """Vertices of color ``j`` placed on a path of ``n`` vertices with gap ``2*(j//2) + 2``."""
    return (n // 2 - 1) // (j // 2 + 1) + 1


def _check_path_length(n: int) -> None:
    if n < 2:
        raise PreconditionError(f"path length must be at least 2, got {n}", reason="n >= 2")


def path_upper_bound(n: int, h_graph: Graph) -> BoundReport:
    """Improved upper bound for ``P_n o H``.

    Layers of the color-1 class also carry one spaced color each, placed on the
    odd path positions that color 1 leaves free.
    """
    _check_path_length(n)
    if h_graph.n < 2:
        raise PreconditionError(f"H needs at least two vertices, got {h_graph.n}", "|H| >= 2")
    if is_edgeless(h_graph):
        raise PreconditionError("H is edgeless", reason=EDGELESS_FACTOR)
    alpha_h = independence_number(h_graph)[0]
    k = h_graph.n - alpha_h
    terms = BoundTerms(
        order_product=n * h_graph.n,
        alpha_product=math.ceil(n / 2) * alpha_h,
        packing_terms=[
            IndexedTerm(index=i, value=math.ceil(n / (i + 1))) for i in range(2, k + 2)
        ],
        spacing_terms=[
            IndexedTerm(index=j, value=spaced_count(n, j)) for j in range(k + 2, h_graph.n + 2)
        ],
        classes=h_graph.n + 1,
        parameters={"n": n, "k": k, "alpha_h": alpha_h},
    )
    return BoundReport(
        source="path_upper", value=terms.total(), terms=terms, exactness=Exactness.UPPER
    )


def path_complete_upper_bound(n: int, m: int) -> BoundReport:
    """``nm - ceil(n/2) - sum_{i=2}^{m} ceil(n/(i+1)) - floor((n//2 - 1)/((m+1)//2 + 1)) + m``.

    Equals ``path_upper_bound(n, K_m)`` with the single spaced term folded into
    the class count.
    """
    _check_path_length(n)
    if m < 2:
        raise PreconditionError(f"clique size must be at least 2, got {m}", reason="m >= 2")
    terms = BoundTerms(
        order_product=n * m,
        alpha_product=math.ceil(n / 2),
        packing_terms=[IndexedTerm(index=i, value=math.ceil(n / (i + 1))) for i in range(2, m + 1)],
        spacing_terms=[IndexedTerm(index=m + 1, value=spaced_count(n, m + 1) - 1)],
        classes=m,
        parameters={"n": n, "m": m},
    )
    return BoundReport(
        source="path_complete_upper",
        value=terms.total(),
        terms=terms,
        exactness=Exactness.UPPER,
    )


def endpoint_forcing_order(t: int) -> int:
    """``1 + lcm(2, ..., t+1)``: path orders whose maximum i-packings (i <= t) hold both ends."""
    if t < 2:
        raise PreconditionError(f"t must be at least 2, got {t}", reason="t >= 2")
    return 1 + math.lcm(*range(2, t + 2))


def _endpoint_misses(n: int, t: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    path = generate(FamilySpec(family="path", n=n))
    distances = all_pairs_distances(path)
    ends = 1 | 1 << (n - 1)
    for i in range(1, t + 1):
        for packing in maximum_packings(path, i, distances):
            if packing.mask & ends != ends:
                yield i, packing.members


def has_endpoint_forcing(t: int, n: Optional[int] = None) -> bool:
    """Whether every maximum i-packing of ``P_n``, ``1 <= i <= t``, contains both endpoints.

    ``n`` defaults to ``endpoint_forcing_order(t)``.
    """
    if n is None:
        n = endpoint_forcing_order(t)
    for i, members in _endpoint_misses(n, t):
        logger.debug("P_%d: maximum %d-packing %s misses an endpoint", n, i, members)
        return False
    return True
