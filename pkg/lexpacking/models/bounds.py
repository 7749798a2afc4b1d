"""Bound reports and layered construction plans."""

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, computed_field, model_validator

from lexpacking.models.coloring import PackingColoring


class Exactness(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    EXACT = "exact"


class IndexedTerm(BaseModel):
    """One summand of a bound, e.g. ``rho_3(G) = 2``."""

    index: int
    value: int


class BoundTerms(BaseModel):
    """Breakdown shared by every formula:

    ``order_product - alpha_product - sum(packing_terms) - sum(spacing_terms) + classes``
    """

    order_product: int
    alpha_product: int
    packing_terms: list[IndexedTerm] = Field(default_factory=list)
    spacing_terms: list[IndexedTerm] = Field(default_factory=list)
    classes: int
    parameters: dict[str, int] = Field(default_factory=dict)

    @property
    def packing_sum(self) -> int:
        return sum(t.value for t in self.packing_terms)

    @property
    def spacing_sum(self) -> int:
        return sum(t.value for t in self.spacing_terms)

    def total(self) -> int:
        return (
            self.order_product
            - self.alpha_product
            - self.packing_sum
            - self.spacing_sum
            + self.classes
        )

    def render(self) -> str:
        """Human-readable arithmetic, e.g. ``48 - 12 - (3+2+2) + 4``."""
        parts = [str(self.order_product), f"- {self.alpha_product}"]
        if self.packing_terms:
            parts.append("- (" + "+".join(str(t.value) for t in self.packing_terms) + ")")
        if self.spacing_terms:
            parts.append("- (" + "+".join(str(t.value) for t in self.spacing_terms) + ")")
        parts.append(f"+ {self.classes}")
        return " ".join(parts)


# symbolic form of each bound; s_j = (n//2 - 1)//(j//2 + 1) + 1 counts a spaced color on P_n
BOUND_FORMULAS: dict[str, str] = {
    "counting_lower": "|G||H| - alpha(G)alpha(H) - sum_{i=2}^{diam(G)-1} rho_i(G) + d(G)",
    "layered_upper": (
        "|G||H| - alpha(G)alpha(H) - sum_{i=2}^{k+1} rho_i(G) + k + 1, k = |H| - alpha(H)"
    ),
    "exact_complete_factor": "|G||H| - alpha(H) + 1, G complete",
    "exact_diameter_two": "|G||H| - alpha(G)alpha(H) + 1, diam(G) = 2",
    "exact_diameter_three": "|G||H| - alpha(G)alpha(H) - rho_2(G) + 2, diam(G) = 3",
    "exact_layer_surplus": (
        "|G||H| - alpha(G)alpha(H) - sum_{i=2}^{diam(G)-1} rho_i(G) + diam(G) - 1,"
        " |H| - alpha(H) >= diam(G) - 1"
    ),
    "path_upper": (
        "n|H| - ceil(n/2)alpha(H) - sum_{i=2}^{k+1} ceil(n/(i+1))"
        " - sum_{j=k+2}^{|H|+1} s_j + |H| + 1, G = P_n"
    ),
    "path_complete_upper": (
        "nm - ceil(n/2) - sum_{i=2}^{m} ceil(n/(i+1)) - (s_{m+1} - 1) + m, G = P_n, H = K_m"
    ),
}


class BoundReport(BaseModel):
    """A bound with its arithmetic and the symbolic formula it evaluates."""

    source: str
    value: int
    terms: BoundTerms
    exactness: Exactness

    @computed_field  # type: ignore[prop-decorator]
    @property
    def formula(self) -> str:
        return BOUND_FORMULAS[self.source]

    @model_validator(mode="after")
    def _value_matches_terms(self) -> "BoundReport":
        if self.value != self.terms.total():
            raise ValueError(
                f"{self.source}: value {self.value} does not match terms ({self.terms.total()})"
            )
        return self


class LayerAssignment(BaseModel):
    """Color ``color`` placed on ``vertices`` (flat product indices) of G-layer ``layer``."""

    color: int
    layer: int
    vertices: list[int]


class ConstructionPlan(BaseModel):
    """Layer-by-layer coloring of a lexicographic product.

    Color 1 sits on ``color_one``; every other repeated color lives inside a
    single G-layer and no two such colors share a layer. ``spacing`` and
    ``counts`` hold the gap and the number of vertices for the colors spread
    over path layers that already carry color 1.
    """

    n_g: int
    n_h: int
    color_one: list[int]
    assignments: list[LayerAssignment] = Field(default_factory=list)
    spacing: dict[int, int] = Field(default_factory=dict)
    counts: dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_layers(self) -> "ConstructionPlan":
        layers = [a.layer for a in self.assignments]
        if len(layers) != len(set(layers)):
            raise ValueError("two repeated colors share a G-layer")
        for a in self.assignments:
            if any(v % self.n_h != a.layer for v in a.vertices):
                raise ValueError(f"color {a.color} leaves its layer {a.layer}")
        for color, gap in self.spacing.items():
            if gap != 2 * (color // 2) + 2:
                raise ValueError(f"color {color} has spacing {gap}")
        return self

    def to_coloring(self) -> PackingColoring:
        """Materialise the plan; leftover vertices get fresh colors in index order."""
        colors = [0] * (self.n_g * self.n_h)
        for v in self.color_one:
            colors[v] = 1
        for a in self.assignments:
            for v in a.vertices:
                if colors[v]:
                    raise ValueError(f"vertex {v} colored twice")
                colors[v] = a.color
        fresh = max(colors) + 1
        for v, c in enumerate(colors):
            if not c:
                colors[v] = fresh
                fresh += 1
        return PackingColoring.from_colors(colors)


class Certificate(BaseModel):
    """Bounds and the solver's answer for one product ``G o H``.

    ``sandwich_ok``, ``tight`` and ``formula_agrees`` are None unless the
    solver proved optimality (and, for ``formula_agrees``, a closed form applied).
    """

    g_label: str
    h_label: str
    order: int
    lower: BoundReport
    upper: Optional[BoundReport] = None
    upper_error: Optional[str] = None
    path_upper: Optional[BoundReport] = None
    exact_formula: Optional[BoundReport] = None
    chi_rho: int
    optimal: bool
    explored: int = 0
    elapsed_seconds: float = 0.0
    sandwich_ok: Optional[bool] = None
    tight: Optional[bool] = None
    formula_agrees: Optional[bool] = None

    @property
    def best_upper(self) -> Optional[int]:
        values = [r.value for r in (self.upper, self.path_upper) if r is not None]
        return min(values) if values else None


class SweepSummary(BaseModel):
    instances: int = 0
    solved: int = 0
    formula_instances: int = 0
    agreements: int = 0
    disagreements: list[str] = Field(default_factory=list)
    unsolved: list[str] = Field(default_factory=list)

    @property
    def agreement_rate(self) -> float:
        """Share of solved instances with a closed form where the two agree."""
        checked = self.agreements + len(self.disagreements)
        return 1.0 if checked == 0 else self.agreements / checked
