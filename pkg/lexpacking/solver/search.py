"""Exact packing chromatic numbers by pruned depth-first search.

The decision search walks the vertices in a fixed order (descending degree,
lowest index on ties) and tries colors in increasing order. Every partial
coloring is checked against the class capacities: color 1 holds at most
``alpha(G)`` vertices, color ``i`` at most ``rho_i(G)``, and colors from
``diam(G)`` on are singletons. The singleton colors are interchangeable, so
they form one pool and a vertex only ever opens the lowest unused one.
"""

from __future__ import annotations

import logging
import time
from typing import Optional

from lexpacking.config import load_settings
from lexpacking.errors import DisconnectedGraphError, PreconditionError
from lexpacking.graphs.distances import all_pairs_distances
from lexpacking.graphs.independence import clique_cover_size, packing_number
from lexpacking.models.coloring import (
    PackingColoring,
    SearchResult,
    SearchStatus,
    SolverBudget,
    SolveResult,
    SolveStatus,
)
from lexpacking.models.graph import DistanceMatrix, Graph
from lexpacking.solver.verify import greedy_coloring

logger = logging.getLogger(__name__)


def default_budget() -> SolverBudget:
    settings = load_settings()
    return SolverBudget(seconds=settings.budget_seconds, nodes=settings.budget_nodes)


class _BudgetExhausted(Exception):
    pass


class _BudgetTracker:
    """Node and wall-clock accounting shared by every decision run of a solve."""

    def __init__(self, budget: SolverBudget, progress_interval: int) -> None:
        self.started = time.monotonic()
        self.deadline = None if budget.seconds is None else self.started + budget.seconds
        self.node_limit = budget.nodes
        self.progress_interval = progress_interval
        self.explored = 0

    def tick(self) -> None:
        self.explored += 1
        if self.node_limit is not None and self.explored > self.node_limit:
            raise _BudgetExhausted
        if self.explored & 1023 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _BudgetExhausted
            if self.explored % self.progress_interval < 1024:
                logger.debug(
                    "search progress: %d nodes, %.1fs", self.explored, self.elapsed
                )

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started


class PackingSearch:
    """Per-graph data shared by the decision runs: distances, order, capacities."""

    def __init__(self, graph: Graph, distances: Optional[DistanceMatrix] = None) -> None:
        self.graph = graph
        self.distances = distances or all_pairs_distances(graph)
        self.order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
        if self.distances.connected:
            self.pool_start: Optional[int] = max(int(self.distances.diameter), 1)
        else:
            self.pool_start = None
        self._packing: dict[int, int] = {}
        self._power_rows: dict[int, tuple[int, ...]] = {}

    def capacity(self, color: int) -> int:
        """Largest possible size of the class of ``color``."""
        if self.pool_start is not None and color >= self.pool_start:
            return 1
        reach = self.distances.max_finite_distance
        if reach == 0:
            return self.graph.n
        # beyond the largest finite distance the power graph stops changing
        t = min(color, reach)
        if t not in self._packing:
            self._packing[t] = packing_number(self.graph, t, self.distances)[0]
        return self._packing[t]

    def power_rows(self, color: int) -> tuple[int, ...]:
        if color not in self._power_rows:
            self._power_rows[color] = tuple(
                self.distances.ball(v, color) & ~(1 << v) for v in range(self.graph.n)
            )
        return self._power_rows[color]

    def covering_bound(self) -> int:
        """Least ``k`` whose class capacities add up to at least ``n``."""
        covered = 0
        k = 0
        while covered < self.graph.n:
            k += 1
            covered += self.capacity(k)
        return k

    def greedy_incumbent(self) -> PackingColoring:
        """Better of first-fit in index order and in search order."""
        return min(
            greedy_coloring(self.graph, self.distances),
            greedy_coloring(self.graph, self.distances, self.order),
            key=lambda coloring: coloring.k,
        )

    def decide(
        self, k: int, tracker: _BudgetTracker, incumbent: Optional[PackingColoring] = None
    ) -> SearchResult:
        started_nodes = tracker.explored
        started = time.monotonic()
        run = _DecisionRun(self, k, tracker)
        logger.debug("deciding k=%d on %d vertices", k, self.graph.n)
        try:
            found = run.search()
        except _BudgetExhausted:
            status = SearchStatus.TIMEOUT
            coloring = None
        else:
            status = SearchStatus.FOUND if found else SearchStatus.NONE
            coloring = PackingColoring.from_colors(run.colors) if found else None
        result = SearchResult(
            k=k,
            status=status,
            coloring=coloring,
            incumbent=incumbent if status is SearchStatus.TIMEOUT else None,
            explored=tracker.explored - started_nodes,
            elapsed_seconds=time.monotonic() - started,
        )
        logger.debug(
            "k=%d: %s after %d nodes (%.2fs)",
            k,
            status.value,
            result.explored,
            result.elapsed_seconds,
        )
        return result


class _DecisionRun:
    """One depth-first search for a packing coloring with colors ``1..k``."""

    def __init__(self, search: PackingSearch, k: int, tracker: _BudgetTracker) -> None:
        n = search.graph.n
        full = search.graph.vertex_mask
        if search.pool_start is None:
            explicit = k
        else:
            explicit = min(k, search.pool_start - 1)
        self.order = search.order
        self.tracker = tracker
        self.explicit = explicit
        self.pool_start = explicit + 1
        self.pool_size = k - explicit
        self.pool_used = 0

        colors = range(1, explicit + 1)
        self.capacities = [0] + [search.capacity(c) for c in colors]
        self.balls = [()] + [
            tuple(search.distances.ball(v, c) for v in range(n)) for c in colors
        ]
        self.power = [()] + [search.power_rows(c) for c in colors]
        self.sizes = [0] * (explicit + 1)
        self.candidates = [full] * (explicit + 1)
        self.colors = [0] * n
        self.uncolored = full

    def search(self) -> bool:
        if not self._feasible():
            return False
        return self._extend(0)

    def _extend(self, position: int) -> bool:
        if position == len(self.order):
            return True
        v = self.order[position]
        bit = 1 << v
        self.uncolored &= ~bit

        sizes = self.sizes
        candidates = self.candidates
        for c in range(1, self.explicit + 1):
            if sizes[c] >= self.capacities[c] or not candidates[c] & bit:
                continue
            self.tracker.tick()
            saved = candidates[c]
            candidates[c] = saved & ~self.balls[c][v]
            sizes[c] += 1
            self.colors[v] = c
            if self._feasible() and self._extend(position + 1):
                return True
            sizes[c] -= 1
            candidates[c] = saved

        if self.pool_used < self.pool_size:
            self.tracker.tick()
            self.colors[v] = self.pool_start + self.pool_used
            self.pool_used += 1
            if self._feasible() and self._extend(position + 1):
                return True
            self.pool_used -= 1

        self.colors[v] = 0
        self.uncolored |= bit
        return False

    def _feasible(self) -> bool:
        """Can the uncolored vertices still fit into the remaining class room?"""
        uncolored = self.uncolored
        if not uncolored:
            return True
        need = uncolored.bit_count()
        pool_left = self.pool_size - self.pool_used
        total = pool_left
        reach = 0
        wide: list[tuple[int, int, int]] = []
        for c in range(1, self.explicit + 1):
            room = self.capacities[c] - self.sizes[c]
            if room <= 0:
                continue
            open_ = self.candidates[c] & uncolored
            if not open_:
                continue
            reach |= open_
            count = open_.bit_count()
            if room >= 2 and count >= 2:
                wide.append((c, room, open_))
            total += min(room, count)

        if total < need:
            return False
        if not pool_left and uncolored & ~reach:
            return False

        # refine with clique covers of each class's distance power
        for c, room, open_ in wide:
            count = min(room, open_.bit_count())
            bound = min(room, clique_cover_size(self.power[c], open_))
            total -= count - bound
            if total < need:
                return False
        return True


def counting_lower_bound(graph: Graph, distances: Optional[DistanceMatrix] = None) -> int:
    """Capacity-counting lower bound on the packing chromatic number.

    Fills classes ``1, 2, ...`` to their capacities ``alpha, rho_2, ...`` (classes
    from ``diam(G)`` on hold one vertex) until all vertices are covered.
    """
    search = PackingSearch(graph, distances)
    if not search.distances.connected:
        raise DisconnectedGraphError("the counting bound needs a connected graph")
    return search.covering_bound()


def find_coloring_with_k(
    graph: Graph,
    k: int,
    budget: Optional[SolverBudget] = None,
    distances: Optional[DistanceMatrix] = None,
) -> SearchResult:
    """Look for a packing coloring with colors ``1..k``: FOUND, NONE or TIMEOUT.

    A greedy coloring that already fits in ``k`` colors is returned without
    searching. On TIMEOUT the greedy coloring comes back as the incumbent.
    """
    if k < 1:
        raise PreconditionError(f"need at least one color, got k={k}")
    budget = budget or default_budget()
    tracker = _BudgetTracker(budget, load_settings().progress_interval)
    search = PackingSearch(graph, distances)
    greedy = search.greedy_incumbent()
    if greedy.k <= k:
        logger.debug("greedy coloring fits in %d colors", k)
        return SearchResult(k=k, status=SearchStatus.FOUND, coloring=greedy)
    return search.decide(k, tracker, incumbent=greedy)


def exact_chi_rho(
    graph: Graph,
    budget: Optional[SolverBudget] = None,
    distances: Optional[DistanceMatrix] = None,
) -> SolveResult:
    """Packing chromatic number, climbing from the counting bound.

    Every ``k`` below the answer is refuted before the answer is accepted, so
    the first FOUND is optimal. A timeout returns the best coloring seen.
    """
    budget = budget or default_budget()
    tracker = _BudgetTracker(budget, load_settings().progress_interval)
    search = PackingSearch(graph, distances)

    incumbent = search.greedy_incumbent()
    lower = search.covering_bound()
    logger.info(
        "solving %d vertices: counting bound %d, greedy %d", graph.n, lower, incumbent.k
    )

    decisions: list[SearchResult] = []
    optimal = False
    k = lower
    while True:
        if k >= incumbent.k:
            optimal = True
            break
        result = search.decide(k, tracker, incumbent)
        decisions.append(result)
        if result.status is SearchStatus.FOUND:
            assert result.coloring is not None
            incumbent = result.coloring
            optimal = True
            break
        if result.status is SearchStatus.TIMEOUT:
            break
        k += 1

    return SolveResult(
        best=incumbent,
        optimal=optimal,
        status=SolveStatus.OPTIMAL if optimal else SolveStatus.TIMEOUT,
        lower_bound=lower,
        explored=tracker.explored,
        elapsed_seconds=tracker.elapsed,
        decisions=decisions,
    )
