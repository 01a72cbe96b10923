"""Binary matrices: conflicts, column reduction, row splits, phylogeny extraction.

A valid matrix has at least one row and one column and no all-zero row or
column.  Rows and columns are identified by 0-based position; the carried
labels (1-based by default) are used only for files, DOT output and messages.
Column supports are handled as int bitsets over row indices throughout, so
inclusion tests cost one mask operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ConflictError, MatrixError

Bits = tuple[int, ...]


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Pack an iterable of non-negative indices into a bitset."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _default_labels(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable 0/1 matrix with no all-zero row or column."""

    rows: tuple[Bits, ...]
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(b) for b in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise MatrixError("matrix needs at least one row and one column")
        n = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MatrixError(f"row {i + 1} has {len(row)} entries, expected {n}")
            if any(b not in (0, 1) for b in row):
                raise MatrixError(f"row {i + 1} contains a non-binary entry")
            if not any(row):
                raise MatrixError(f"row {i + 1} is all zeros")
        for j in range(n):
            if not any(row[j] for row in rows):
                raise MatrixError(f"column {j + 1} is all zeros")
        if not self.row_labels:
            object.__setattr__(self, "row_labels", _default_labels("r", len(rows)))
        if not self.col_labels:
            object.__setattr__(self, "col_labels", _default_labels("c", n))
        if len(self.row_labels) != len(rows) or len(self.col_labels) != n:
            raise MatrixError("label count does not match matrix shape")

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @cached_property
    def col_masks(self) -> tuple[int, ...]:
        """Column supports as bitsets over row indices."""
        masks = [0] * self.n
        for i, row in enumerate(self.rows):
            bit = 1 << i
            for j, b in enumerate(row):
                if b:
                    masks[j] |= bit
        return tuple(masks)

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Rows as bitsets over column indices."""
        return tuple(mask_of(j for j, b in enumerate(row) if b) for row in self.rows)

    @classmethod
    def from_col_masks(cls, m: int, masks: Sequence[int],
                       row_labels: tuple[str, ...] = (),
                       col_labels: tuple[str, ...] = ()) -> "BinaryMatrix":
        """Build an m-row matrix whose j-th column support is ``masks[j]``."""
        rows = tuple(
            tuple(1 if (mask >> i) & 1 else 0 for mask in masks) for i in range(m)
        )
        return cls(rows, row_labels, col_labels)


@dataclass(frozen=True)
class ConflictWitness:
    """Column pair and row triple realizing the forbidden 3x2 pattern.

    The submatrix on rows ``(r, r2, r3)`` and columns ``(col_i, col_j)``
    equals (1,1),(1,0),(0,1) in that order.
    """

    col_i: int
    col_j: int
    rows: tuple[int, int, int]

    def describe(self, matrix: BinaryMatrix) -> str:
        ci, cj = matrix.col_labels[self.col_i], matrix.col_labels[self.col_j]
        rs = ",".join(matrix.row_labels[r] for r in self.rows)
        return f"columns {ci},{cj} on rows {rs}"


@dataclass(frozen=True)
class ColumnReduction:
    """A matrix with duplicate columns collapsed, plus the index mappings."""

    reduced: BinaryMatrix
    class_of: tuple[int, ...]        # original column -> reduced column
    representative: tuple[int, ...]  # reduced column -> smallest original column


@dataclass(frozen=True)
class RowSplit:
    """A candidate split matrix together with its row partition.

    ``groups[i]`` lists the 0-based split-row indices whose bitwise OR is
    supposed to reproduce source row i.  Use :func:`verify_row_split` to
    check validity; construction performs no checks beyond the matrix's own.
    """

    matrix: BinaryMatrix
    groups: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Verdict:
    """Accept/reject outcome with an explanation for rejections."""

    ok: bool
    reason: Optional[str] = None
    witness: Optional[ConflictWitness] = None

    def __bool__(self) -> bool:
        return self.ok


ACCEPT = Verdict(True)


def find_conflict(matrix: BinaryMatrix) -> Optional[ConflictWitness]:
    """Return the first conflicting column pair, or None if conflict-free.

    Deterministic: the returned (col_i, col_j, r, r2, r3) tuple is the
    lexicographically smallest witness.
    """
    masks = matrix.col_masks
    for i in range(matrix.n):
        for j in range(i + 1, matrix.n):
            both = masks[i] & masks[j]
            only_i = masks[i] & ~masks[j]
            only_j = masks[j] & ~masks[i]
            if both and only_i and only_j:
                rows = tuple(next(bits_of(m)) for m in (both, only_i, only_j))
                return ConflictWitness(i, j, rows)
    return None


def column_support(matrix: BinaryMatrix, col: int) -> frozenset[int]:
    """Row indices holding a 1 in the given column."""
    if not 0 <= col < matrix.n:
        raise ValueError(f"unknown column index {col}")
    return frozenset(bits_of(matrix.col_masks[col]))


def reduce_columns(matrix: BinaryMatrix) -> ColumnReduction:
    """Collapse identical columns, keeping the first occurrence of each."""
    class_of: list[int] = []
    representative: list[int] = []
    seen: dict[int, int] = {}
    for j, mask in enumerate(matrix.col_masks):
        if mask not in seen:
            seen[mask] = len(representative)
            representative.append(j)
        class_of.append(seen[mask])
    reduced = BinaryMatrix(
        tuple(tuple(row[j] for j in representative) for row in matrix.rows),
        matrix.row_labels,
        tuple(matrix.col_labels[j] for j in representative),
    )
    return ColumnReduction(reduced, tuple(class_of), tuple(representative))


def count_distinct_rows(matrix: BinaryMatrix) -> int:
    return len(set(matrix.rows))


def count_distinct_cols(matrix: BinaryMatrix) -> int:
    return len(set(matrix.col_masks))


def is_laminar(matrix: BinaryMatrix) -> bool:
    """True iff every two column supports are nested or disjoint.

    Implemented by direct pairwise support comparison, independently of
    :func:`find_conflict`, so the two can cross-check each other.
    """
    masks = sorted(set(matrix.col_masks))
    for a in range(len(masks)):
        for b in range(a + 1, len(masks)):
            inter = masks[a] & masks[b]
            if inter and inter != masks[a] and inter != masks[b]:
                return False
    return True


def identity_split(matrix: BinaryMatrix) -> RowSplit:
    """The trivial split of a matrix into itself, one singleton group per row."""
    return RowSplit(matrix, tuple((i,) for i in range(matrix.m)))


def verify_row_split(source: BinaryMatrix, candidate: RowSplit,
                     require_conflict_free: bool = True) -> Verdict:
    """Check that ``candidate`` is a (conflict-free) row split of ``source``.

    Accepts iff the groups partition the split rows, every group ORs to its
    source row, and, when ``require_conflict_free`` is set, the split matrix
    has no conflicting column pair.  Rejections name the first failing row or
    carry the conflict witness.
    """
    split = candidate.matrix
    if split.n != source.n:
        raise MatrixError(
            f"column count mismatch: split has {split.n}, source has {source.n}"
        )
    if len(candidate.groups) != source.m:
        return Verdict(False, f"expected {source.m} groups, got {len(candidate.groups)}")
    seen: set[int] = set()
    for i, group in enumerate(candidate.groups):
        for idx in group:
            if not 0 <= idx < split.m:
                return Verdict(False, f"group for row {source.row_labels[i]} "
                                      f"names split row {idx + 1}, out of range")
            if idx in seen:
                return Verdict(False, f"split row {idx + 1} appears in two groups")
            seen.add(idx)
    if len(seen) != split.m:
        missing = next(i for i in range(split.m) if i not in seen)
        return Verdict(False, f"split row {missing + 1} is in no group")
    for i, group in enumerate(candidate.groups):
        combined = 0
        for idx in group:
            combined |= split.row_masks[idx]
        if combined != source.row_masks[i]:
            return Verdict(False, f"group for row {source.row_labels[i]} "
                                  f"does not OR to it")
    if require_conflict_free:
        witness = find_conflict(split)
        if witness is not None:
            return Verdict(False, f"split is not conflict-free: "
                                  f"{witness.describe(split)}", witness)
    return ACCEPT


@dataclass(frozen=True)
class PhyloTree:
    """Rooted tree of distinct column supports ordered by inclusion.

    Node 0 is the synthetic root holding every row; nodes 1..k are the
    distinct supports in first-appearance column order.  ``row_node[i]`` is
    the node whose support is the smallest one containing row i.
    """

    node_masks: tuple[int, ...]
    parent: tuple[Optional[int], ...]
    row_node: tuple[int, ...]
    row_labels: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.node_masks) - 1

    def children(self, node: int) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent) if p == node)

    def support_set(self, node: int) -> frozenset[int]:
        return frozenset(bits_of(self.node_masks[node]))


def build_phylogeny(matrix: BinaryMatrix) -> PhyloTree:
    """Arrange the distinct column supports of a conflict-free matrix as a tree.

    The parent of a support is its unique inclusion-minimal proper superset
    among the supports, or the root.  Raises :class:`ConflictError` (carrying
    the witness) when the matrix has a conflict.
    """
    witness = find_conflict(matrix)
    if witness is not None:
        raise ConflictError(witness, f"cannot build a phylogeny: conflict between "
                                     f"{witness.describe(matrix)}")
    supports = reduce_columns(matrix).reduced.col_masks
    full = (1 << matrix.m) - 1
    node_masks = (full,) + supports
    parent: list[Optional[int]] = [None]
    for v, mask in enumerate(supports, start=1):
        best = 0
        for u, other in enumerate(supports, start=1):
            if u != v and mask & ~other == 0 and mask != other:
                if best == 0 or node_masks[u].bit_count() < node_masks[best].bit_count():
                    best = u
        if best:
            # laminarity makes the minimal proper superset unique
            assert all(node_masks[best] & ~node_masks[u] == 0
                       for u, other in enumerate(supports, start=1)
                       if u != v and mask & ~other == 0 and mask != other)
        parent.append(best)
    row_node = []
    for i in range(matrix.m):
        best = 0
        for u in range(1, len(node_masks)):
            if (node_masks[u] >> i) & 1:
                if best == 0 or node_masks[u].bit_count() < node_masks[best].bit_count():
                    best = u
        row_node.append(best)
    return PhyloTree(node_masks, tuple(parent), tuple(row_node), matrix.row_labels)
