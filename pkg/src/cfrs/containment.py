"""DAGs and the column-support containment digraph.

The containment digraph of a matrix has one vertex per distinct column
support and an arc (u, v) for every proper inclusion u < v, so it is
acyclic and transitively closed by construction.  A plain :class:`Dag`
accepts arbitrary user-supplied arcs and validates acyclicity.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .matrix import BinaryMatrix, bits_of, reduce_columns


class Dag:
    """Immutable directed acyclic graph on vertices 0..n-1.

    Construction validates vertex ids and acyclicity (Kahn's algorithm) and
    fixes sorted adjacency, so every derived computation is deterministic.
    """

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arcset: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) is out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            arcset.add((u, v))
        self.n = n
        self.arcs = frozenset(arcset)
        out_: list[list[int]] = [[] for _ in range(n)]
        in_: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(arcset):
            out_[u].append(v)
            in_[v].append(u)
        self._out = tuple(tuple(vs) for vs in out_)
        self._in = tuple(tuple(sorted(us)) for us in in_)
        indeg = [len(self._in[v]) for v in range(n)]
        queue = [v for v in range(n) if indeg[v] == 0]
        order: list[int] = []
        while queue:
            v = queue.pop()
            order.append(v)
            for w in self._out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if len(order) != n:
            raise ValueError("digraph contains a cycle")
        self._topo = tuple(order)

    def out(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def is_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @property
    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    @cached_property
    def reach(self) -> tuple[int, ...]:
        """Bitset per vertex of everything reachable by a non-trivial path."""
        masks = [0] * self.n
        for v in reversed(self._topo):
            acc = 0
            for w in self._out[v]:
                acc |= (1 << w) | masks[w]
            masks[v] = acc
        return tuple(masks)


def transitive_closure(dag: Dag) -> frozenset[tuple[int, int]]:
    """All pairs (u, v) connected by a non-trivial directed path."""
    return frozenset(
        (u, v) for u in range(dag.n) for v in bits_of(dag.reach[u])
    )


def elementary_arcs(dag: Dag) -> frozenset[tuple[int, int]]:
    """Arcs (u, v) with no vertex w such that (u, w) and (w, v) are both arcs.

    On a transitively closed digraph this is the transitive reduction.
    """
    out_mask = [0] * dag.n
    in_mask = [0] * dag.n
    for u, v in dag.arcs:
        out_mask[u] |= 1 << v
        in_mask[v] |= 1 << u
    return frozenset(
        (u, v) for u, v in dag.arcs if not out_mask[u] & in_mask[v]
    )


def height(dag: Dag) -> int:
    """Maximum number of vertices on a directed path."""
    if dag.n == 0:
        return 0
    best = [1] * dag.n
    for v in dag.topological_order:
        for u in dag.in_(v):
            if best[u] + 1 > best[v]:
                best[v] = best[u] + 1
    return max(best)


def width(dag: Dag) -> int:
    """Maximum antichain size: vertex count minus a maximum matching on the
    bipartite split of the transitive closure."""
    from .matching import maximum_bipartite_matching

    if dag.n == 0:
        return 0
    adj = [list(bits_of(dag.reach[u])) for u in range(dag.n)]
    match_left, _ = maximum_bipartite_matching(adj, dag.n)
    return dag.n - sum(1 for v in match_left if v is not None)


class ContainmentDigraph(Dag):
    """Containment digraph of a binary matrix.

    Vertex i is the support of the i-th distinct column (first-appearance
    order), stored as a bitset over row indices; arcs are all proper
    inclusions.  ``class_of`` maps original columns to vertices and
    ``representative`` maps each vertex to its smallest original column.
    """

    def __init__(self, supports: tuple[int, ...], n_rows: int,
                 row_labels: tuple[str, ...],
                 class_of: tuple[int, ...], representative: tuple[int, ...]):
        k = len(supports)
        if len(set(supports)) != k or 0 in supports:
            raise ValueError("vertex supports must be distinct and nonempty")
        arcs = [
            (i, j)
            for i in range(k)
            for j in range(k)
            if i != j and supports[i] & ~supports[j] == 0
        ]
        super().__init__(k, arcs)
        self.supports = tuple(supports)
        self.n_rows = n_rows
        self.row_labels = tuple(row_labels)
        self.class_of = tuple(class_of)
        self.representative = tuple(representative)

    def support_set(self, v: int) -> frozenset[int]:
        return frozenset(bits_of(self.supports[v]))

    def support_label(self, v: int) -> str:
        names = ",".join(self.row_labels[r] for r in bits_of(self.supports[v]))
        return "{" + names + "}"


def build_containment(matrix: BinaryMatrix) -> ContainmentDigraph:
    """Containment digraph over the distinct column supports of a matrix."""
    red = reduce_columns(matrix)
    return ContainmentDigraph(
        supports=red.reduced.col_masks,
        n_rows=matrix.m,
        row_labels=matrix.row_labels,
        class_of=red.class_of,
        representative=red.representative,
    )
