"""Command-line entry point for lexpacking."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from lexpacking.bounds.certify import certify_pair, summarize, sweep
from lexpacking.bounds.constructions import layered_coloring, path_layered_coloring
from lexpacking.bounds.formulas import (
    exact_value,
    lower_bound_lex,
    path_upper_bound,
    upper_bound_lex,
)
from lexpacking.config import Settings, load_settings
from lexpacking.errors import ColoringError, LexPackingError, PreconditionError
from lexpacking.graphs.core import generate, is_path_graph, load_graph
from lexpacking.graphs.distances import all_pairs_distances
from lexpacking.graphs.edgelist import format_edge_list, write_edge_list
from lexpacking.graphs.independence import packing_number
from lexpacking.logging_config import configure_logging
from lexpacking.models.bounds import BoundReport
from lexpacking.models.coloring import PackingColoring, SearchStatus, SolverBudget
from lexpacking.models.graph import FamilySpec, Graph, distance_label
from lexpacking.models.reports import ExitCode, GraphSpec, RunReport
from lexpacking.products.lexicographic import lex_product
from lexpacking.solver.search import exact_chi_rho, find_coloring_with_k
from lexpacking.solver.verify import verify_coloring

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_FACTORS = ("complete:2", "complete:3", "path:3", "path:4", "cycle:4")

# construction names as the bounds are usually cited
METHOD_ALIASES = {"theorem2": "layered", "theorem5": "path"}


def _target(
    g: Optional[GraphSpec], product: Optional[tuple[GraphSpec, GraphSpec]]
) -> tuple[Graph, dict[str, Any]]:
    """The graph a command works on: ``--g`` alone or the product of ``--product G H``."""
    if g is not None and product is not None:
        raise PreconditionError("give --g or --product, not both", reason="conflicting graphs")
    if product is not None:
        left, right = product
        graph = lex_product(load_graph(left), load_graph(right)).graph
        return graph, {"product": [left.label, right.label]}
    if g is None:
        raise PreconditionError("give either --g or --product", reason="missing graph")
    return load_graph(g), {"g": g.label}


def _bound(report: BoundReport) -> dict[str, Any]:
    return report.model_dump(mode="json")


def cmd_bounds(g: GraphSpec, h: GraphSpec) -> RunReport:
    g_graph, h_graph = load_graph(g), load_graph(h)
    report = RunReport(command="bounds", inputs={"g": g.label, "h": h.label})

    report.results["lower"] = _bound(lower_bound_lex(g_graph, h_graph))
    try:
        report.results["upper"] = _bound(upper_bound_lex(g_graph, h_graph))
    except PreconditionError as exc:
        report.results["upper_error"] = exc.reason
        report.messages.append(f"upper bound not applicable: {exc}")
    if is_path_graph(g_graph):
        try:
            report.results["path_upper"] = _bound(path_upper_bound(g_graph.n, h_graph))
        except PreconditionError as exc:
            report.results["path_upper_error"] = exc.reason
            report.messages.append(f"path bound not applicable: {exc}")
    exact = exact_value(g_graph, h_graph)
    if exact is not None:
        report.results["exact"] = _bound(exact)
    return report


def cmd_exact(
    g: Optional[GraphSpec] = None,
    product: Optional[tuple[GraphSpec, GraphSpec]] = None,
    budget: Optional[SolverBudget] = None,
    k: Optional[int] = None,
) -> RunReport:
    graph, inputs = _target(g, product)
    report = RunReport(command="exact", inputs=inputs)
    if budget is not None:
        report.inputs["budget"] = budget.model_dump()

    if k is not None:
        report.inputs["k"] = k
        found = find_coloring_with_k(graph, k, budget)
        report.results = found.model_dump(mode="json")
        report.status = found.status.value
        report.exit_code = {
            SearchStatus.FOUND: ExitCode.OK,
            SearchStatus.NONE: ExitCode.NEGATIVE,
            SearchStatus.TIMEOUT: ExitCode.TIMEOUT,
        }[found.status]
        return report

    solved = exact_chi_rho(graph, budget)
    report.results = solved.model_dump(mode="json")
    report.results["chi_rho"] = solved.best.k
    report.status = solved.status.value
    report.exit_code = ExitCode.OK if solved.optimal else ExitCode.TIMEOUT
    if not solved.optimal:
        report.messages.append(
            f"budget exhausted: chi_rho lies in [{solved.lower_bound}, {solved.best.k}]"
        )
    return report


def cmd_construct(
    method: str,
    h: GraphSpec,
    g: Optional[GraphSpec] = None,
    n: Optional[int] = None,
    out: Optional[Path] = None,
) -> RunReport:
    method = METHOD_ALIASES.get(method, method)
    h_graph = load_graph(h)
    if method == "layered":
        if g is None:
            raise PreconditionError("--method layered needs --g", reason="missing graph")
        g_graph = load_graph(g)
        inputs: dict[str, Any] = {"method": method, "g": g.label, "h": h.label}
        bound = upper_bound_lex(g_graph, h_graph)
        coloring = layered_coloring(g_graph, h_graph)
    elif method == "path":
        if n is None:
            raise PreconditionError("--method path needs --n", reason="missing path length")
        inputs = {"method": method, "n": n, "h": h.label}
        bound = path_upper_bound(n, h_graph)
        g_graph = generate(FamilySpec(family="path", n=n))
        coloring = path_layered_coloring(n, h_graph)
    else:
        raise PreconditionError(f"unknown construction {method!r}", reason="method")

    product = lex_product(g_graph, h_graph)
    verdict = verify_coloring(product.graph, coloring)
    report = RunReport(command="construct", inputs=inputs)
    report.results = {
        "k": coloring.k,
        "bound": _bound(bound),
        "matches_bound": coloring.k == bound.value,
        "verification": verdict.model_dump(mode="json"),
        "coloring": coloring.model_dump(mode="json"),
    }
    if out is not None:
        out.write_text(coloring.model_dump_json(indent=2) + "\n", encoding="utf-8")
        report.results["out"] = str(out)
    if not verdict.valid:
        report.status = "invalid"
        report.exit_code = ExitCode.NEGATIVE
    return report


def read_coloring(path: Path) -> PackingColoring:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        return PackingColoring.model_validate(data)
    except OSError as exc:
        raise ColoringError(f"cannot read coloring file {path}: {exc}") from exc
    except (ValueError, ValidationError) as exc:
        raise ColoringError(f"malformed coloring file {path}: {exc}") from exc


def cmd_verify(
    coloring_path: Path,
    g: Optional[GraphSpec] = None,
    product: Optional[tuple[GraphSpec, GraphSpec]] = None,
) -> RunReport:
    graph, inputs = _target(g, product)
    inputs["coloring"] = str(coloring_path)
    coloring = read_coloring(coloring_path)
    verdict = verify_coloring(graph, coloring)
    report = RunReport(command="verify", inputs=inputs, results=verdict.model_dump(mode="json"))
    report.results["k"] = coloring.k
    if verdict.valid:
        report.status = "valid"
    else:
        assert verdict.violation is not None
        bad = verdict.violation
        report.status = "invalid"
        report.exit_code = ExitCode.NEGATIVE
        report.messages.append(
            f"vertices {bad.u} and {bad.v} share color {bad.color} at distance {bad.distance}"
        )
    return report


def cmd_rho(g: GraphSpec, t: int) -> RunReport:
    graph = load_graph(g)
    distances = all_pairs_distances(graph)
    value, witness = packing_number(graph, t, distances)
    return RunReport(
        command="rho",
        inputs={"g": g.label, "t": t},
        results={
            "rho": value,
            "witness": list(witness.members),
            "diameter": distance_label(distances.diameter),
        },
    )


def cmd_product(g: GraphSpec, h: GraphSpec, out: Optional[Path] = None) -> RunReport:
    product = lex_product(load_graph(g), load_graph(h))
    header = [f"lexicographic product {g.label} o {h.label}"]
    report = RunReport(command="product", inputs={"g": g.label, "h": h.label})
    report.results = {"n": product.graph.n, "m": product.graph.edge_count}
    if out is not None:
        write_edge_list(product.graph, out, header)
        report.results["out"] = str(out)
    else:
        report.results["edge_list"] = format_edge_list(product.graph, header)
    return report


def cmd_certify(g: GraphSpec, h: GraphSpec, budget: Optional[SolverBudget] = None) -> RunReport:
    certificate = certify_pair(load_graph(g), load_graph(h), budget, g.label, h.label)
    report = RunReport(
        command="certify",
        inputs={"g": g.label, "h": h.label},
        results=certificate.model_dump(mode="json"),
    )
    if not certificate.optimal:
        report.status = "timeout"
        report.exit_code = ExitCode.TIMEOUT
    elif certificate.sandwich_ok is False or certificate.formula_agrees is False:
        report.status = "mismatch"
        report.exit_code = ExitCode.NEGATIVE
    return report


def cmd_sweep(
    h_specs: Sequence[GraphSpec],
    min_order: int = 2,
    max_order: int = 5,
    max_product: int = 24,
    budget: Optional[SolverBudget] = None,
) -> RunReport:
    h_graphs = {spec.label: load_graph(spec) for spec in h_specs}
    certificates = list(sweep(h_graphs, min_order, max_order, max_product, budget))
    summary = summarize(certificates)
    report = RunReport(
        command="sweep",
        inputs={
            "h": list(h_graphs),
            "min_order": min_order,
            "max_order": max_order,
            "max_product": max_product,
        },
        results={
            "summary": summary.model_dump(mode="json"),
            "certificates": [c.model_dump(mode="json") for c in certificates],
        },
    )
    if summary.disagreements:
        report.status = "mismatch"
        report.exit_code = ExitCode.NEGATIVE
    report.messages.extend(f"unsolved: {name}" for name in summary.unsolved)
    return report


def _render_bound(name: str, data: dict[str, Any]) -> str:
    terms = BoundReport.model_validate(data).terms
    return f"  {name:<12} {data['value']:>6}  = {terms.render():<40} [{data['source']}]"


def render_report(report: RunReport) -> str:
    """Aligned plain-text view of a report."""
    lines = [f"{report.command}: {report.status}"]
    for key, value in report.inputs.items():
        lines.append(f"  {key:<12} {value}")
    results = report.results
    for key, value in results.items():
        if isinstance(value, dict) and {"source", "value", "terms"} <= value.keys():
            lines.append(_render_bound(key, value))
        elif key == "edge_list":
            lines.append(str(value).rstrip("\n"))
        elif key == "certificates":
            lines.extend(
                f"  {c['g_label']} o {c['h_label']}: chi_rho {c['chi_rho']}"
                f"{'' if c['optimal'] else ' (timeout)'}"
                f" lower {c['lower']['value']}"
                f" formula {c['exact_formula']['value'] if c['exact_formula'] else '-'}"
                for c in value
            )
        elif key not in {"coloring", "incumbent", "decisions", "best"}:
            lines.append(f"  {key:<12} {value}")
    lines.extend(f"  note: {message}" for message in report.messages)
    return "\n".join(lines)


def _budget(args: argparse.Namespace, settings: Settings) -> SolverBudget:
    seconds = settings.budget_seconds if args.budget_seconds is None else args.budget_seconds
    nodes = settings.budget_nodes if args.budget_nodes is None else args.budget_nodes
    return SolverBudget(seconds=seconds, nodes=nodes)


def _product_pair(values: Optional[list[str]]) -> Optional[tuple[GraphSpec, GraphSpec]]:
    if values is None:
        return None
    return GraphSpec.parse(values[0]), GraphSpec.parse(values[1])


def _spec(value: Optional[str]) -> Optional[GraphSpec]:
    return None if value is None else GraphSpec.parse(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexpacking",
        description="Packing chromatic numbers of lexicographic graph products.",
    )
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    commands = parser.add_subparsers(dest="command", required=True)

    def json_flag(sub: argparse.ArgumentParser) -> None:
        # SUPPRESS keeps a top-level --json when the subcommand omits it
        sub.add_argument(
            "--json",
            action="store_true",
            default=argparse.SUPPRESS,
            help="print the report as JSON",
        )

    def budget_flags(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--budget-seconds", type=float, default=None)
        sub.add_argument("--budget-nodes", type=int, default=None)

    bounds = commands.add_parser("bounds", help="evaluate every bound for G o H")
    bounds.add_argument("--g", required=True)
    bounds.add_argument("--h", required=True)

    exact = commands.add_parser("exact", help="exact packing chromatic number")
    exact.add_argument("--g")
    exact.add_argument("--product", nargs=2, metavar=("G", "H"))
    exact.add_argument("--k", type=int, help="only decide whether k colors suffice")
    budget_flags(exact)

    construct = commands.add_parser("construct", help="build a layered coloring")
    construct.add_argument(
        "--method", choices=("layered", "path", *METHOD_ALIASES), required=True
    )
    construct.add_argument("--g")
    construct.add_argument("--h", required=True)
    construct.add_argument("--n", type=int)
    construct.add_argument("--out", type=Path)

    verify = commands.add_parser("verify", help="check a coloring file")
    verify.add_argument("--g")
    verify.add_argument("--product", nargs=2, metavar=("G", "H"))
    verify.add_argument("--coloring", type=Path, required=True)

    rho = commands.add_parser("rho", help="t-packing number with a witness")
    rho.add_argument("--g", required=True)
    rho.add_argument("--t", type=int, required=True)

    product = commands.add_parser("product", help="edge list of G o H")
    product.add_argument("--g", required=True)
    product.add_argument("--h", required=True)
    product.add_argument("--out", type=Path)

    certify = commands.add_parser("certify", help="bounds against the exact solver")
    certify.add_argument("--g", required=True)
    certify.add_argument("--h", required=True)
    budget_flags(certify)

    sweeper = commands.add_parser("sweep", help="certify all small connected G")
    sweeper.add_argument("--h", nargs="+", default=list(DEFAULT_SWEEP_FACTORS))
    sweeper.add_argument("--min-order", type=int, default=2)
    sweeper.add_argument("--max-order", type=int, default=5)
    sweeper.add_argument("--max-product", type=int, default=24)
    budget_flags(sweeper)

    for sub in commands.choices.values():
        json_flag(sub)
    return parser


def dispatch(args: argparse.Namespace, settings: Settings) -> RunReport:
    if args.command == "bounds":
        return cmd_bounds(GraphSpec.parse(args.g), GraphSpec.parse(args.h))
    if args.command == "exact":
        return cmd_exact(
            _spec(args.g), _product_pair(args.product), _budget(args, settings), args.k
        )
    if args.command == "construct":
        return cmd_construct(args.method, GraphSpec.parse(args.h), _spec(args.g), args.n, args.out)
    if args.command == "verify":
        return cmd_verify(args.coloring, _spec(args.g), _product_pair(args.product))
    if args.command == "rho":
        return cmd_rho(GraphSpec.parse(args.g), args.t)
    if args.command == "product":
        return cmd_product(GraphSpec.parse(args.g), GraphSpec.parse(args.h), args.out)
    if args.command == "certify":
        return cmd_certify(
            GraphSpec.parse(args.g), GraphSpec.parse(args.h), _budget(args, settings)
        )
    return cmd_sweep(
        [GraphSpec.parse(h) for h in args.h],
        args.min_order,
        args.max_order,
        args.max_product,
        _budget(args, settings),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    try:
        settings = load_settings()
    except LexPackingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.USAGE)
    configure_logging(settings)

    args = build_parser().parse_args(argv)
    try:
        report = dispatch(args, settings)
    except (LexPackingError, ValueError) as exc:
        logger.info("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.USAGE)

    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(render_report(report))
    return int(report.exit_code)


if __name__ == "__main__":
    sys.exit(main())
