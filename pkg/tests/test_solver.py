import itertools
import random

import pytest
from pydantic import ValidationError

from lexpacking.catalog import connected_graphs
from lexpacking.errors import ColoringError, DisconnectedGraphError, PreconditionError
from lexpacking.graphs import all_pairs_distances, from_edge_list, generate
from lexpacking.models import (
    PackingColoring,
    SearchStatus,
    SolverBudget,
    SolveResult,
    SolveStatus,
)
from lexpacking.products import lex_product
from lexpacking.solver import (
    counting_lower_bound,
    exact_chi_rho,
    find_coloring_with_k,
    greedy_coloring,
    verify_coloring,
)


def _brute_force_chi_rho(graph):
    distances = all_pairs_distances(graph)
    pairs = list(itertools.combinations(range(graph.n), 2))
    for k in range(1, graph.n + 1):
        for colors in itertools.product(range(1, k + 1), repeat=graph.n):
            if all(
                colors[u] != colors[v] or distances.dist(u, v) > colors[u] for u, v in pairs
            ):
                return k
    raise AssertionError("distinct colors always work")


def _backtracking_chi_rho(graph):
    distances = all_pairs_distances(graph)
    colors = [0] * graph.n

    def extend(v, k):
        if v == graph.n:
            return True
        for c in range(1, k + 1):
            if all(colors[u] != c or distances.dist(u, v) > c for u in range(v)):
                colors[v] = c
                if extend(v + 1, k):
                    return True
        return False

    k = 1
    while not extend(0, k):
        k += 1
    return k


def _random_graph(rng, n, p):
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, edges)


def test_verify_coloring_examples():
    p4 = generate("path:4")
    assert verify_coloring(p4, PackingColoring.from_colors([1, 2, 1, 3])).valid
    assert verify_coloring(p4, PackingColoring.from_colors([1, 2, 3, 4])).valid

    report = verify_coloring(p4, PackingColoring.from_colors([1, 1, 2, 3]))
    assert not report.valid
    assert (report.violation.u, report.violation.v) == (0, 1)
    assert report.violation.color == 1
    assert report.violation.distance == 1


def test_verify_coloring_reports_first_violation_in_index_order():
    p6 = generate("path:6")
    report = verify_coloring(p6, PackingColoring.from_colors([2, 1, 2, 1, 1, 3]))
    assert (report.violation.u, report.violation.v, report.violation.color) == (0, 2, 2)


def test_verify_coloring_rejects_size_mismatch():
    with pytest.raises(ColoringError):
        verify_coloring(generate("path:4"), PackingColoring.from_colors([1, 2, 1]))


def test_packing_coloring_validation():
    with pytest.raises(ValidationError):
        PackingColoring(n=2, k=1, colors=[0, 1])
    with pytest.raises(ValidationError):
        PackingColoring(n=2, k=3, colors=[1, 2])
    with pytest.raises(ValidationError):
        PackingColoring(n=3, k=2, colors=[1, 2])


def test_color_classes():
    coloring = PackingColoring.from_colors([1, 2, 1, 3, 1])
    assert coloring.color_class(1) == [0, 2, 4]
    assert coloring.color_class(4) == []
    assert coloring.class_sizes() == {1: 3, 2: 1, 3: 1}


def test_vertices_in_different_components_may_share_any_color():
    two_edges = from_edge_list(4, [(0, 1), (2, 3)])
    assert verify_coloring(two_edges, PackingColoring.from_colors([1, 2, 2, 1])).valid


def test_greedy_coloring():
    assert greedy_coloring(generate("complete:5")).k == 5
    assert greedy_coloring(generate("empty:5")).colors == [1] * 5

    p4 = generate("path:4")
    coloring = greedy_coloring(p4)
    assert coloring.colors == [1, 2, 1, 3]
    assert verify_coloring(p4, coloring).valid


def test_counting_lower_bound():
    assert counting_lower_bound(generate("complete:5")) == 5
    assert counting_lower_bound(generate("path:4")) >= 2
    assert counting_lower_bound(generate("path:8")) == 3

    product = lex_product(generate("path:8"), generate("path:6"))
    assert counting_lower_bound(product.graph) == 31

    with pytest.raises(DisconnectedGraphError):
        counting_lower_bound(generate("empty:3"))


def test_find_coloring_with_k_examples():
    assert find_coloring_with_k(generate("complete:3"), 2).status is SearchStatus.NONE

    found = find_coloring_with_k(generate("empty:5"), 1)
    assert found.status is SearchStatus.FOUND
    assert found.coloring.colors == [1] * 5

    p4 = generate("path:4")
    found = find_coloring_with_k(p4, 3)
    assert found.status is SearchStatus.FOUND
    assert verify_coloring(p4, found.coloring).valid
    assert find_coloring_with_k(p4, 2).status is SearchStatus.NONE

    with pytest.raises(PreconditionError):
        find_coloring_with_k(p4, 0)


def test_find_coloring_with_k_honours_node_budget():
    product = lex_product(generate("path:8"), generate("path:6"))
    result = find_coloring_with_k(product.graph, 31, SolverBudget(seconds=None, nodes=10))
    assert result.status is SearchStatus.TIMEOUT
    assert result.coloring is None
    assert result.incumbent.k > 31
    assert verify_coloring(product.graph, result.incumbent).valid


def test_find_coloring_with_k_accepts_a_fitting_greedy_coloring():
    result = find_coloring_with_k(generate("petersen"), 10, SolverBudget(seconds=None, nodes=1))
    assert result.status is SearchStatus.FOUND
    assert result.coloring.k <= 10
    assert result.incumbent is None
    assert verify_coloring(generate("petersen"), result.coloring).valid


def test_exact_chi_rho_examples():
    for n in range(1, 6):
        result = exact_chi_rho(generate(f"complete:{n}"))
        assert result.optimal
        assert result.best.k == n

    p4 = exact_chi_rho(generate("path:4"))
    assert p4.status is SolveStatus.OPTIMAL
    assert p4.best.k == 3

    assert exact_chi_rho(generate("petersen")).best.k == 7


def test_exact_chi_rho_matches_brute_force_on_small_graphs():
    graphs = [g for _, g in connected_graphs(1, 5)]
    graphs += [generate("path:6"), generate("cycle:6"), from_edge_list(5, [(0, 1), (2, 3)])]
    for graph in graphs:
        result = exact_chi_rho(graph)
        assert result.optimal
        assert result.best.k == _brute_force_chi_rho(graph), graph.edges()
        assert verify_coloring(graph, result.best).valid


def test_exact_chi_rho_reports_timeout_honestly():
    product = lex_product(generate("path:8"), generate("path:6"))
    result = exact_chi_rho(product.graph, SolverBudget(seconds=None, nodes=10))
    assert result.lower_bound == 31
    assert verify_coloring(product.graph, result.best).valid
    if not result.optimal:
        assert result.status is SolveStatus.TIMEOUT
        assert result.best.k > 31


def test_solve_result_rejects_optimal_below_lower_bound():
    with pytest.raises(ValidationError):
        SolveResult(
            best=PackingColoring.from_colors([1, 2]),
            optimal=True,
            status=SolveStatus.OPTIMAL,
            lower_bound=3,
        )


def test_exact_chi_rho_matches_backtracking_on_connected_graphs_up_to_seven_vertices():
    for label, graph in connected_graphs(6, 7):
        result = exact_chi_rho(graph)
        assert result.optimal, label
        assert result.best.k == _backtracking_chi_rho(graph), label


def test_exact_chi_rho_is_deterministic():
    graphs = [
        generate("petersen"),
        lex_product(generate("path:4"), generate("complete:2")).graph,
        lex_product(generate("cycle:5"), generate("path:2")).graph,
    ]
    for graph in graphs:
        first = exact_chi_rho(graph)
        second = exact_chi_rho(graph)
        assert first.best.colors == second.best.colors
        assert [d.status for d in first.decisions] == [d.status for d in second.decisions]
        assert first.explored == second.explored

    p4 = generate("path:4")
    assert find_coloring_with_k(p4, 3).coloring == find_coloring_with_k(p4, 3).coloring


def test_adding_an_edge_never_lowers_chi_rho():
    rng = random.Random(20240611)
    for _ in range(40):
        n = rng.randint(3, 7)
        graph = _random_graph(rng, n, 0.35)
        missing = [
            (u, v) for u, v in itertools.combinations(range(n), 2) if not graph.has_edge(u, v)
        ]
        if not missing:
            continue
        denser = from_edge_list(n, graph.edges() + [rng.choice(missing)])
        assert exact_chi_rho(denser).best.k >= exact_chi_rho(graph).best.k, graph.edges()
