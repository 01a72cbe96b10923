"""End-user pipelines: exact, heuristic, and approximation solvers.

Every solver returns a verified conflict-free row split plus a report with
the instance statistics (height, width, distinct columns) so the
approximation guarantees are self-documenting:

* ``exact-rows`` / ``exact-distinct``: budgeted exhaustive search over
  branchings, globally optimal.
* ``linear``: optimal among path-shaped (linear) branchings, computed via
  the min-price chain partition; the tower value certifies optimality
  within that class.
* ``height``: split under the empty branching, at most height(M) times the
  row optimum.
* ``width``: split from a minimum-price width-size chain partition, at most
  width(M) times the row optimum.
* ``distinct-2``: singleton split of the reduced matrix, at most twice the
  distinct-row optimum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .branching import (
    DEFAULT_BUDGET,
    Branching,
    branching_split,
    exact_min_irreducible,
    exact_min_uncovered,
    linear_from_chains,
)
from .containment import ContainmentDigraph, build_containment, height, width
from .matrix import (
    BinaryMatrix,
    RowSplit,
    count_distinct_rows,
    reduce_columns,
    verify_row_split,
)
from .poset import evaluate, min_price_chain_partition


@dataclass(frozen=True)
class SolveReport:
    """Summary of one solver run.

    ``beta_lower_bound`` is always a valid lower bound on the minimum row
    count of any conflict-free split (the row count m in general, the exact
    value for exact-rows).  ``tower_value`` is the antichain-tower
    certificate for the linear-branching methods and None otherwise; it
    bounds the linear optimum, not the unrestricted one.
    """

    method: str
    rows: int
    distinct_rows: int
    beta_lower_bound: int
    tower_value: Optional[int]
    height: int
    width: int
    k: int
    elapsed_seconds: float

    def to_json_dict(self) -> dict:
        # elapsed is excluded so identical runs write identical report files
        return {
            "method": self.method,
            "rows": self.rows,
            "distinct_rows": self.distinct_rows,
            "beta_lower_bound": self.beta_lower_bound,
            "tower_value": self.tower_value,
            "height": self.height,
            "width": self.width,
            "k": self.k,
        }


def _report(method: str, matrix: BinaryMatrix, digraph: ContainmentDigraph,
            split: RowSplit, started: float, beta_lower_bound: Optional[int] = None,
            tower_value: Optional[int] = None) -> SolveReport:
    verdict = verify_row_split(matrix, split, require_conflict_free=True)
    assert verdict.ok, f"solver produced an invalid split: {verdict.reason}"
    return SolveReport(
        method=method,
        rows=split.matrix.m,
        distinct_rows=count_distinct_rows(split.matrix),
        beta_lower_bound=matrix.m if beta_lower_bound is None else beta_lower_bound,
        tower_value=tower_value,
        height=height(digraph),
        width=width(digraph),
        k=digraph.n,
        elapsed_seconds=time.perf_counter() - started,
    )


def _linear_pipeline(matrix: BinaryMatrix, method: str):
    started = time.perf_counter()
    digraph = build_containment(matrix)
    sizes = [s.bit_count() for s in digraph.supports]
    partition, tower = min_price_chain_partition(digraph, sizes)
    split = branching_split(matrix, linear_from_chains(partition), digraph)
    price, value = evaluate(partition, tower, sizes)
    report = _report(method, matrix, digraph, split, started, tower_value=value)
    assert report.rows == price == value
    return split, report


def solve_linear_heuristic(matrix: BinaryMatrix) -> tuple[RowSplit, SolveReport]:
    """Optimal split among linear branchings, with a certificate.

    Runs the min-price chain partition on the containment digraph with
    support sizes as weights; the resulting row count is exactly the best
    achievable by any disjoint-paths branching, and the report's tower value
    certifies it.
    """
    return _linear_pipeline(matrix, "linear")


def solve_exact(matrix: BinaryMatrix, objective: str = "rows",
                budget: int = DEFAULT_BUDGET) -> tuple[RowSplit, SolveReport]:
    """Globally optimal split for the chosen objective.

    ``objective`` is "rows" (minimum row count) or "distinct" (minimum
    distinct-row count).  Raises BudgetError when the branching count
    exceeds the budget.
    """
    if objective not in ("rows", "distinct"):
        raise ValueError(f"unknown objective {objective!r}")
    started = time.perf_counter()
    digraph = build_containment(matrix)
    if objective == "rows":
        branching, value = exact_min_uncovered(digraph, budget)
        method, bound = "exact-rows", value
    else:
        branching, value = exact_min_irreducible(digraph, budget)
        method, bound = "exact-distinct", None
    split = branching_split(matrix, branching, digraph)
    report = _report(method, matrix, digraph, split, started, beta_lower_bound=bound)
    if objective == "rows":
        assert report.rows == value
    else:
        assert report.distinct_rows == value
    return split, report


def approx_distinct_2(matrix: BinaryMatrix) -> tuple[RowSplit, SolveReport]:
    """Split with at most k distinct rows, hence at most twice the optimum.

    Splits each reduced row with t ones into t singleton rows, then
    re-expands duplicate columns.  The distinct-row optimum is at least k/2,
    which gives the factor-2 guarantee.
    """
    started = time.perf_counter()
    digraph = build_containment(matrix)
    red = reduce_columns(matrix)
    pairs = [
        (i, c)
        for i in range(red.reduced.m)
        for c in range(red.reduced.n)
        if red.reduced.rows[i][c]
    ]
    rows = tuple(
        tuple(1 if red.class_of[j] == c else 0 for j in range(matrix.n))
        for _, c in pairs
    )
    groups: list[list[int]] = [[] for _ in range(matrix.m)]
    for idx, (i, _) in enumerate(pairs):
        groups[i].append(idx)
    split = RowSplit(BinaryMatrix(rows), tuple(tuple(g) for g in groups))
    return split, _report("distinct-2", matrix, digraph, split, started)


def approx_height(matrix: BinaryMatrix) -> tuple[RowSplit, SolveReport]:
    """Split under the empty branching: at most height(M) times the optimum.

    Produces one row per (row, support) incidence, so the row count is the
    sum of the support sizes.
    """
    started = time.perf_counter()
    digraph = build_containment(matrix)
    split = branching_split(matrix, Branching.empty(digraph.n), digraph)
    return split, _report("height", matrix, digraph, split, started)


def approx_width(matrix: BinaryMatrix) -> tuple[RowSplit, SolveReport]:
    """Split from a width-size chain partition: at most width(M) times the
    optimum.

    Uses the minimum-price width-size partition, which can only improve on
    an arbitrary one while keeping the guarantee.
    """
    return _linear_pipeline(matrix, "width")
