"""Branchings of the containment digraph and the splits they induce.

A branching picks at most one outgoing arc per vertex; it is encoded as an
out-choice tuple so the degree bound holds structurally.  Uncovered pairs
(r, v) are the rows of the induced split and the vertices owning at least
one uncovered pair are its distinct rows, which is what the exact solvers
minimize.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .containment import ContainmentDigraph, Dag, build_containment, elementary_arcs
from .errors import BudgetError, MatrixError
from .matrix import (
    ACCEPT,
    BinaryMatrix,
    RowSplit,
    Verdict,
    bits_of,
    reduce_columns,
    verify_row_split,
)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Branching:
    """Out-choice per vertex: ``choice[v]`` is v's successor or None."""

    choice: tuple[Optional[int], ...]

    @property
    def k(self) -> int:
        return len(self.choice)

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v in enumerate(self.choice) if v is not None)

    @classmethod
    def empty(cls, k: int) -> "Branching":
        return cls((None,) * k)

    @classmethod
    def from_arcs(cls, k: int, arcs) -> "Branching":
        choice: list[Optional[int]] = [None] * k
        for u, v in arcs:
            if not (0 <= u < k and 0 <= v < k):
                raise ValueError(f"arc ({u},{v}) is out of range")
            if choice[u] is not None:
                raise ValueError(f"vertex {u} has two outgoing arcs")
            choice[u] = v
        return cls(tuple(choice))


def validate_branching(digraph: Dag, branching: Branching) -> Verdict:
    """Accept iff every chosen arc exists in the digraph."""
    if branching.k != digraph.n:
        return Verdict(False, f"branching covers {branching.k} vertices, "
                              f"digraph has {digraph.n}")
    for u, v in enumerate(branching.choice):
        if v is not None and not digraph.is_arc(u, v):
            return Verdict(False, f"({u},{v}) is not an arc of the digraph")
    return ACCEPT


def _cover_masks(digraph: ContainmentDigraph, branching: Branching) -> list[int]:
    cover = [0] * digraph.n
    for u, v in enumerate(branching.choice):
        if v is not None:
            cover[v] |= digraph.supports[u]
    return cover


def _checked(digraph: Dag, branching: Branching) -> None:
    verdict = validate_branching(digraph, branching)
    if not verdict:
        raise ValueError(f"invalid branching: {verdict.reason}")


def uncovered_pairs(digraph: ContainmentDigraph,
                    branching: Branching) -> tuple[tuple[int, int], ...]:
    """Pairs (row, vertex) with the row in the vertex's support but not in
    the union of its chosen in-neighbors, sorted by (row, vertex)."""
    _checked(digraph, branching)
    cover = _cover_masks(digraph, branching)
    pairs = [
        (r, v)
        for v in range(digraph.n)
        for r in bits_of(digraph.supports[v] & ~cover[v])
    ]
    pairs.sort()
    return tuple(pairs)


def irreducible_vertices(digraph: ContainmentDigraph,
                         branching: Branching) -> frozenset[int]:
    """Vertices keeping at least one uncovered row."""
    _checked(digraph, branching)
    cover = _cover_masks(digraph, branching)
    return frozenset(
        v for v in range(digraph.n) if digraph.supports[v] & ~cover[v]
    )


def branching_split(matrix: BinaryMatrix, branching: Branching,
                    digraph: Optional[ContainmentDigraph] = None) -> RowSplit:
    """The conflict-free row split induced by a branching.

    One split row per uncovered pair (r, v), holding a 1 in column j exactly
    when column j's support vertex is reachable from v along the branching;
    duplicate columns of the source are re-expanded so the split keeps all n
    columns.  Row r's group collects its own uncovered pairs.  Rows are
    ordered by (source row, vertex) for reproducible files.
    """
    d = digraph if digraph is not None else build_containment(matrix)
    if d.n_rows != matrix.m or len(d.class_of) != matrix.n:
        raise ValueError("digraph does not belong to this matrix")
    pairs = uncovered_pairs(d, branching)
    # reachability along the branching, incl. v itself; choice targets have
    # strictly larger supports, so fill the memo by decreasing support size
    forward = [0] * d.n
    order = sorted(range(d.n), key=lambda v: d.supports[v].bit_count(), reverse=True)
    for v in order:
        forward[v] = 1 << v
        nxt = branching.choice[v]
        if nxt is not None:
            forward[v] |= forward[nxt]
    rows = tuple(
        tuple(1 if (forward[v] >> d.class_of[j]) & 1 else 0 for j in range(matrix.n))
        for _, v in pairs
    )
    groups: list[list[int]] = [[] for _ in range(matrix.m)]
    for idx, (r, _) in enumerate(pairs):
        groups[r].append(idx)
    return RowSplit(BinaryMatrix(rows), tuple(tuple(g) for g in groups))


def split_to_branching(matrix: BinaryMatrix, split: RowSplit) -> Branching:
    """Extract from a verified conflict-free split a branching whose own
    split is a row subset of it.

    Reduces the columns of both matrices consistently, takes the elementary
    arcs (no two-arc shortcut) of the split's containment relation, and maps
    them back to the source digraph.  Guarantees that the branching's
    uncovered-pair count is at most the split's row count and its
    irreducible-vertex count at most the split's distinct-row count.
    """
    verdict = verify_row_split(matrix, split, require_conflict_free=True)
    if not verdict:
        raise MatrixError(f"not a conflict-free row split: {verdict.reason}")
    red = reduce_columns(matrix)
    k = red.reduced.n
    split_masks = [split.matrix.col_masks[j] for j in red.representative]
    # distinct source columns stay distinct in any row split
    assert len(set(split_masks)) == k
    arcs = [
        (i, j)
        for i in range(k)
        for j in range(k)
        if i != j and split_masks[i] & ~split_masks[j] == 0
    ]
    elem = elementary_arcs(Dag(k, arcs))
    choice: list[Optional[int]] = [None] * k
    for i, j in sorted(elem):
        # conflict-freeness forbids two elementary arcs out of one vertex
        assert choice[i] is None
        choice[i] = j
    return Branching(tuple(choice))


def branching_state_count(digraph: Dag) -> int:
    """Number of branchings: the product over vertices of out-degree + 1."""
    total = 1
    for v in range(digraph.n):
        total *= len(digraph.out(v)) + 1
    return total


def iter_branchings(digraph: Dag) -> Iterator[Branching]:
    """Every branching, in lexicographic order of the choice tuple."""
    options = [(None, *digraph.out(v)) for v in range(digraph.n)]
    for combo in itertools.product(*options):
        yield Branching(combo)


def _decision_order(digraph: Dag) -> list[int]:
    """Topological order that gets arc heads fully decided early.

    Greedy Kahn: among available vertices prefer the one whose emission
    brings some head closest to having all its in-neighbors placed.
    """
    n = digraph.n
    head_pending = [len(digraph.in_(v)) for v in range(n)]
    available = sorted(v for v in range(n) if head_pending[v] == 0)
    placed = [False] * n
    order: list[int] = []
    while available:
        best_v, best_score = None, None
        for v in available:
            score = min(
                (head_pending[u] - 1 for u in digraph.out(v)), default=n + 1
            )
            if best_score is None or score < best_score:
                best_v, best_score = v, score
        order.append(best_v)
        placed[best_v] = True
        available.remove(best_v)
        for u in digraph.out(best_v):
            head_pending[u] -= 1
            if head_pending[u] == 0:
                available.append(u)
        available.sort()
    assert len(order) == n
    return order


def _exact_minimize(
    digraph: ContainmentDigraph,
    cost: Callable[[int], int],
    budget: int,
) -> tuple[Branching, int]:
    """Shared exact solver: minimize the sum over vertices of
    ``cost(uncovered_mask)`` over all branchings.

    Depth-first over per-vertex out-choices (None first, then neighbors in
    index order) with branch-and-bound; a vertex's cost is accumulated the
    moment its last in-neighbor has chosen, so the running total counts
    exactly the fully decided vertices.  The bound is primed with the empty
    branching and two greedy ones.  Returns the first optimum reached in the
    fixed search order.
    """
    k = digraph.n
    states = branching_state_count(digraph)
    if states > budget:
        raise BudgetError(
            f"{states} branchings exceed the enumeration budget of {budget}"
        )
    supports = digraph.supports
    out_nbrs = [digraph.out(v) for v in range(k)]
    choosers = [v for v in _decision_order(digraph) if out_nbrs[v]]

    def total(choice: tuple[Optional[int], ...]) -> int:
        cover = [0] * k
        for u, c in enumerate(choice):
            if c is not None:
                cover[c] |= supports[u]
        return sum(cost(supports[v] & ~cover[v]) for v in range(k))

    smallest = tuple(
        min(out_nbrs[v], key=lambda u: (supports[u].bit_count(), u))
        if out_nbrs[v] else None
        for v in range(k)
    )
    largest = tuple(
        max(out_nbrs[v], key=lambda u: (supports[u].bit_count(), -u))
        if out_nbrs[v] else None
        for v in range(k)
    )
    bound = min(total(c) for c in ((None,) * k, smallest, largest)) + 1

    pending = [len(digraph.in_(v)) for v in range(k)]
    cover = [0] * k
    base = sum(cost(supports[v]) for v in range(k) if pending[v] == 0)
    choice: list[Optional[int]] = [None] * k
    best: Optional[tuple[Optional[int], ...]] = None

    def descend(t: int, acc: int) -> None:
        nonlocal bound, best
        if t == len(choosers):
            if acc < bound:
                bound = acc
                best = tuple(choice)
            return
        v = choosers[t]
        for c in (None, *out_nbrs[v]):
            choice[v] = c
            saved = 0
            if c is not None:
                saved = cover[c]
                cover[c] |= supports[v]
            gained = 0
            for u in out_nbrs[v]:
                pending[u] -= 1
                if pending[u] == 0:
                    gained += cost(supports[u] & ~cover[u])
            if acc + gained < bound:
                descend(t + 1, acc + gained)
            for u in out_nbrs[v]:
                pending[u] += 1
            if c is not None:
                cover[c] = saved
            choice[v] = None

    descend(0, base)
    assert best is not None
    return Branching(best), bound


def exact_min_uncovered(digraph: ContainmentDigraph,
                        budget: int = DEFAULT_BUDGET) -> tuple[Branching, int]:
    """Branching minimizing the number of uncovered pairs, with that number.

    This equals the minimum row count over all conflict-free row splits of
    the digraph's matrix.
    """
    return _exact_minimize(digraph, lambda mask: mask.bit_count(), budget)


def exact_min_irreducible(digraph: ContainmentDigraph,
                          budget: int = DEFAULT_BUDGET) -> tuple[Branching, int]:
    """Branching minimizing the number of irreducible vertices, with that
    number: the minimum distinct-row count over all conflict-free splits."""
    return _exact_minimize(digraph, lambda mask: 1 if mask else 0, budget)


def linear_from_chains(chains) -> Branching:
    """Turn a chain partition into the branching linking consecutive chain
    vertices (valid because the containment digraph is transitively closed)."""
    flat = [v for chain in chains for v in chain]
    k = len(flat)
    if sorted(flat) != list(range(k)):
        raise ValueError("chains must partition the vertices 0..k-1")
    choice: list[Optional[int]] = [None] * k
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            choice[a] = b
    return Branching(tuple(choice))


def chains_from_linear(branching: Branching):
    """Inverse of :func:`linear_from_chains` for linear branchings.

    Raises ValueError when some vertex is entered by two branching arcs.
    """
    heads = [v for v in branching.choice if v is not None]
    if len(heads) != len(set(heads)):
        raise ValueError("branching is not linear: a vertex has in-degree two")
    head_set = set(heads)
    chains = []
    for start in range(branching.k):
        if start in head_set:
            continue
        path = [start]
        while branching.choice[path[-1]] is not None:
            path.append(branching.choice[path[-1]])
            if len(path) > branching.k:
                raise ValueError("branching contains a cycle")
        chains.append(tuple(path))
    return tuple(chains)
