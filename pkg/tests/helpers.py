"""Shared fixtures and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from cfrs import BinaryMatrix, CubicGraph, Dag, gen_random

# rows (1,1),(1,0),(0,1): the two column supports cross, so the matrix has a
# conflict and its digraph is two incomparable vertices
CROSSING_PAIR = BinaryMatrix(((1, 1), (1, 0), (0, 1)))

# rows (1,1),(0,1): supports {r1} and {r1,r2} are nested, conflict-free
NESTED_PAIR = BinaryMatrix(((1, 1), (0, 1)))

IDENTITY_2 = BinaryMatrix(((1, 0), (0, 1)))

# 4-vertex gap instance {a},{b},{a,b},{b,c} with inclusion arcs
GAP_DAG = Dag(4, [(0, 2), (1, 2), (1, 3)])


def gap_weights(z: int, Z: int) -> list[int]:
    return [z, Z, Z, z]


def k4() -> CubicGraph:
    return CubicGraph(4, tuple(itertools.combinations(range(4), 2)))


def k33() -> CubicGraph:
    return CubicGraph(6, tuple((a, b + 3) for a in range(3) for b in range(3)))


def q3() -> CubicGraph:
    return CubicGraph(8, tuple(
        (u, u ^ bit) for u in range(8) for bit in (1, 2, 4) if u < (u ^ bit)
    ))


def random_corpus(count: int, max_side: int = 6, seed: int = 20240) -> list[BinaryMatrix]:
    """Deterministic corpus of small random matrices."""
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        m = rng.randint(1, max_side)
        n = rng.randint(1, max_side)
        density = rng.choice((0.3, 0.5, 0.7))
        corpus.append(gen_random(m, n, density, rng.randint(0, 10**9)))
    return corpus


def random_dag(rng: random.Random, max_vertices: int = 10,
               arc_probability: float = 0.35) -> Dag:
    n = rng.randint(1, max_vertices)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < arc_probability
    ]
    return Dag(n, arcs)


def random_monotone_weights(rng: random.Random, dag: Dag,
                            high: int = 20) -> list[int]:
    weights = [rng.randint(0, high) for _ in range(dag.n)]
    for v in dag.topological_order:
        for u in dag.in_(v):
            weights[v] = max(weights[v], weights[u])
    return weights


def duplicate_column(matrix: BinaryMatrix, col: int) -> BinaryMatrix:
    """Append a copy of the given column."""
    return BinaryMatrix(tuple(row + (row[col],) for row in matrix.rows))


# ---------------------------------------------------------------------------
# Independent oracles


def oracle_max_antichain_size(dag: Dag) -> int:
    """Maximum independent set of the comparability relation, by subsets."""
    reach = dag.reach
    best = 0
    for subset in itertools.chain.from_iterable(
        itertools.combinations(range(dag.n), size)
        for size in range(dag.n, 0, -1)
    ):
        ok = all(
            not (reach[a] >> b) & 1 and not (reach[b] >> a) & 1
            for a, b in itertools.combinations(subset, 2)
        )
        if ok:
            return len(subset)
    return best


def oracle_has_conflict(matrix: BinaryMatrix) -> bool:
    """Exhaustive scan over all column pairs and row triples."""
    for i, j in itertools.combinations(range(matrix.n), 2):
        for rows in itertools.permutations(range(matrix.m), 3):
            picked = [(matrix.rows[r][i], matrix.rows[r][j]) for r in rows]
            if picked == [(1, 1), (1, 0), (0, 1)]:
                return True
    return False


def oracle_longest_chain(dag: Dag) -> int:
    """Longest path vertex count by depth-first search over all paths."""
    best = 1 if dag.n else 0

    def walk(v: int, length: int) -> None:
        nonlocal best
        best = max(best, length)
        for w in dag.out(v):
            walk(w, length + 1)

    for v in range(dag.n):
        walk(v, 1)
    return best
