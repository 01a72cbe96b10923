"""Text formats: matrix files, split files, DOT export.

Matrix file: optional '#' comment lines, a header line "m n", then m lines
each a string of n characters over {0,1}.  Split file: the split matrix in
the same format, a blank line, then m lines "i: j1 j2 ..." giving the
1-based split-row indices of each source row's group.
"""

from __future__ import annotations

from .containment import ContainmentDigraph, Dag
from .errors import MatrixError
from .matrix import BinaryMatrix, PhyloTree, RowSplit, bits_of


def format_matrix(matrix: BinaryMatrix) -> str:
    lines = [f"{matrix.m} {matrix.n}"]
    lines += ["".join(str(b) for b in row) for row in matrix.rows]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _parse_matrix_lines(lines: list[tuple[int, str]]) -> BinaryMatrix:
    if not lines:
        raise MatrixError("empty matrix file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixError(f"line {lineno}: expected header 'm n', got {header!r}")
    m, n = int(parts[0]), int(parts[1])
    if len(lines) - 1 < m:
        raise MatrixError(f"expected {m} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in lines[1:m + 1]:
        if len(line) != n or any(ch not in "01" for ch in line):
            raise MatrixError(f"line {lineno}: expected {n} characters over 01, "
                              f"got {line!r}")
        rows.append(tuple(int(ch) for ch in line))
    return BinaryMatrix(tuple(rows))


def parse_matrix(text: str) -> BinaryMatrix:
    lines = _content_lines(text)
    matrix = _parse_matrix_lines(lines)
    if len(lines) != matrix.m + 1:
        raise MatrixError("trailing content after the matrix rows")
    return matrix


def format_split(split: RowSplit) -> str:
    body = format_matrix(split.matrix)
    lines = [
        f"{i + 1}: " + " ".join(str(j + 1) for j in group)
        for i, group in enumerate(split.groups)
    ]
    return body + "\n" + "\n".join(lines) + "\n"


def parse_split(text: str) -> RowSplit:
    lines = _content_lines(text)
    matrix = _parse_matrix_lines(lines)
    group_lines = lines[matrix.m + 1:]
    if not group_lines:
        raise MatrixError("split file has no group lines")
    groups: dict[int, tuple[int, ...]] = {}
    for lineno, line in group_lines:
        head, sep, rest = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise MatrixError(f"line {lineno}: expected 'i: j1 j2 ...', got {line!r}")
        i = int(head)
        if i in groups:
            raise MatrixError(f"line {lineno}: duplicate group for row {i}")
        try:
            members = tuple(int(tok) - 1 for tok in rest.split())
        except ValueError as exc:
            raise MatrixError(f"line {lineno}: non-integer split-row index") from exc
        if any(j < 0 for j in members):
            raise MatrixError(f"line {lineno}: split-row indices are 1-based")
        groups[i] = members
    count = len(groups)
    if sorted(groups) != list(range(1, count + 1)):
        raise MatrixError("group lines must cover rows 1..m exactly once")
    return RowSplit(matrix, tuple(groups[i] for i in range(1, count + 1)))


def digraph_to_dot(digraph: Dag, labels=None, name: str = "containment") -> str:
    """DOT rendering with one node per vertex and one edge per arc.

    Containment digraphs get support-set labels like "{r1,r3}" by default.
    """
    if labels is None:
        if isinstance(digraph, ContainmentDigraph):
            labels = [digraph.support_label(v) for v in range(digraph.n)]
        else:
            labels = [str(v) for v in range(digraph.n)]
    lines = [f"digraph {name} {{"]
    for v in range(digraph.n):
        lines.append(f'  v{v} [label="{labels[v]}"];')
    for u, v in sorted(digraph.arcs):
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def phylo_to_dot(tree: PhyloTree, name: str = "phylogeny") -> str:
    """DOT rendering of a phylogeny: support nodes plus boxed row leaves."""
    lines = [f"digraph {name} {{"]
    for v, mask in enumerate(tree.node_masks):
        label = "{" + ",".join(tree.row_labels[r] for r in bits_of(mask)) + "}"
        lines.append(f'  n{v} [label="{label}"];')
    for v, parent in enumerate(tree.parent):
        if parent is not None:
            lines.append(f"  n{parent} -> n{v};")
    for i, node in enumerate(tree.row_node):
        lines.append(f'  r{i} [label="{tree.row_labels[i]}" shape=box];')
        lines.append(f"  n{node} -> r{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
