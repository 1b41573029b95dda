"""Subpattern loci, vertical-path decomposition and the two mark numberings.

Marks are 1-based integers. ``node_of_mark[0]`` is a placeholder so that
``node_of_mark[m]`` is the node carrying mark ``m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .dictionary import Dictionary
from .suffix_tree import SuffixTree

VERTICAL = "vertical"
BFS = "bfs"


class MarkingError(AssertionError):
    """A subpattern has no explicit locus; the tree was not split or is corrupt."""


@dataclass(frozen=True)
class VerticalPathDecomposition:
    """Heavy-path decomposition.

    ``path_of[v]`` is the path id of node ``v``; ``paths[k]`` lists that
    path's nodes by increasing depth; ``path_parent[k]`` is the node the path
    head hangs from (-1 for the root path). Paths are numbered in the order of
    their head's node id.
    """

    path_of: list[int]
    paths: list[list[int]]
    path_parent: list[int]
    top_down: list[int]  # path ids, every path after the one it hangs from

    @property
    def count(self) -> int:
        return len(self.paths)

    def crossings(self) -> list[int]:
        """Number of distinct paths met on the root path of every node."""
        out = [0] * len(self.path_of)
        for k in self.top_down:
            path = self.paths[k]
            top = self.path_parent[k]
            base = out[top] if top >= 0 else 0
            for v in path:
                out[v] = base + 1
        return out


@dataclass(frozen=True)
class MarkAssignment:
    scheme: str
    node_of_mark: list[int]
    mark_of_node: dict[int, int]

    @property
    def count(self) -> int:
        return len(self.node_of_mark) - 1


class GridPoint(NamedTuple):
    x: int
    y: int
    payload: int


@dataclass(frozen=True)
class PatternLinks:
    """``a_f[g]`` lists ``(pattern, h)`` for patterns whose first subpattern
    sits at F-mark ``g``; ``a_s[h]`` lists ``(pattern, g)`` symmetrically."""

    a_f: list[list[tuple[int, int]]]
    a_s: list[list[tuple[int, int]]]


def locate_subpattern_nodes(tree: SuffixTree, subpatterns: Sequence[bytes]) -> list[int]:
    """Explicit node spelling each subpattern exactly."""
    found: dict[bytes, int] = {}
    out = []
    for sp in subpatterns:
        node = found.get(sp)
        if node is None:
            node = _descend_exact(tree, sp)
            found[sp] = node
        out.append(node)
    return out


def _descend_exact(tree: SuffixTree, pattern: bytes) -> int:
    node, pos = 0, 0
    seq, children, start, end = tree.seq, tree.children, tree.start, tree.end
    while pos < len(pattern):
        child = children[node].get(pattern[pos])
        if child is None:
            raise MarkingError(f"subpattern {pattern!r} is not spelled in the tree")
        elen = end[child] - start[child]
        if pos + elen > len(pattern):
            raise MarkingError(f"subpattern {pattern!r} ends inside an edge")
        if seq[start[child]:end[child]] != list(pattern[pos:pos + elen]):
            raise MarkingError(f"subpattern {pattern!r} is not spelled in the tree")
        node = child
        pos += elen
    return node


def decompose_vertical_paths(tree: SuffixTree) -> VerticalPathDecomposition:
    n = len(tree)
    children = tree.children
    order = []
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(children[u].values())
    size = [1] * n
    heavy = [-1] * n
    for u in reversed(order):
        best = -1
        for v in children[u].values():
            size[u] += size[v]
            if best < 0 or size[v] > size[best] or (size[v] == size[best] and v < best):
                best = v
        heavy[u] = best
    parent = tree.parent
    heads = sorted(u for u in range(n) if u == 0 or heavy[parent[u]] != u)
    path_of = [0] * n
    paths = []
    path_parent = []
    for k, h in enumerate(heads):
        path = []
        v = h
        while v >= 0:
            path_of[v] = k
            path.append(v)
            v = heavy[v]
        paths.append(path)
        path_parent.append(parent[h] if h else -1)
    top_down = sorted(range(len(heads)), key=lambda k: tree.level[heads[k]])
    return VerticalPathDecomposition(path_of, paths, path_parent, top_down)


def assign_marks(tree: SuffixTree, decomposition: VerticalPathDecomposition | None,
                 marked_nodes, scheme: str) -> MarkAssignment:
    """Number ``marked_nodes`` consecutively along vertical paths
    (``VERTICAL``) or in level order with ties broken by node id (``BFS``)."""
    marked = set(marked_nodes)
    if scheme == VERTICAL:
        if decomposition is None:
            raise ValueError("the vertical scheme needs a decomposition")
        ordered = [v for path in decomposition.paths for v in path if v in marked]
    elif scheme == BFS:
        ordered = sorted(marked, key=lambda v: (tree.level[v], v))
    else:
        raise ValueError(f"unknown mark scheme {scheme!r}")
    node_of_mark = [-1] + ordered
    return MarkAssignment(scheme, node_of_mark, {v: m for m, v in enumerate(node_of_mark) if m})


def path_mark_intervals(assignment: MarkAssignment, decomposition: VerticalPathDecomposition,
                        node: int) -> list[tuple[int, int]]:
    """Closed mark intervals covering the marked nodes on root..node."""
    if assignment.scheme != VERTICAL:
        raise ValueError("path intervals need the vertical mark scheme")
    marks = assignment.mark_of_node
    out = []
    v = node
    while v >= 0:
        k = decomposition.path_of[v]
        path = decomposition.paths[k]
        lo = hi = 0
        for u in path:
            m = marks.get(u)
            if m:
                if not lo:
                    lo = m
                hi = m
            if u == v:
                break
        if lo:
            out.append((lo, hi))
        v = decomposition.path_parent[k]
    return out


def deepest_marked_ancestor(tree: SuffixTree, assignment: MarkAssignment, node: int) -> int | None:
    marks = assignment.mark_of_node
    v = node
    while v >= 0:
        m = marks.get(v)
        if m:
            return m
        v = tree.parent[v]
    return None


class MarkedTree:
    """One suffix tree with its subpattern loci, decomposition and both mark
    schemes, plus the per-node tables the scan loop reads."""

    def __init__(self, tree: SuffixTree, subpatterns: Sequence[bytes]):
        self.tree = tree
        self.loci = locate_subpattern_nodes(tree, subpatterns)
        self.decomposition = decompose_vertical_paths(tree)
        self.vertical = assign_marks(tree, self.decomposition, self.loci, VERTICAL)
        self.bfs = assign_marks(tree, None, self.loci, BFS)
        self.intervals = self._interval_table()
        self.dma = self._deepest_marked_table()
        # nearest marked proper ancestor, BFS marks, 0 when none
        self.prev = [0] * (self.bfs.count + 1)
        parent = tree.parent
        for m in range(1, self.bfs.count + 1):
            p = parent[self.bfs.node_of_mark[m]]
            self.prev[m] = self.dma[p] if p >= 0 else 0

    def _interval_table(self) -> list[tuple]:
        """``path_mark_intervals`` for every node, filled top-down path by path."""
        dec = self.decomposition
        marks = self.vertical.mark_of_node
        table: list[tuple] = [()] * len(self.tree)
        for k in dec.top_down:
            path = dec.paths[k]
            top = dec.path_parent[k]
            above = table[top] if top >= 0 else ()
            lo = hi = 0
            for v in path:
                m = marks.get(v)
                if m:
                    lo = lo or m
                    hi = m
                table[v] = ((lo, hi),) + above if hi else above
        return table

    def _deepest_marked_table(self) -> list[int]:
        tree = self.tree
        marks = self.bfs.mark_of_node
        out = [0] * len(tree)
        stack = [0]
        while stack:
            u = stack.pop()
            m = marks.get(u)
            if m:
                out[u] = m
            elif u:
                out[u] = out[tree.parent[u]]
            stack.extend(tree.children[u].values())
        return out


def build_pattern_links(dictionary: Dictionary, f_side: MarkedTree, s_side: MarkedTree,
                        scheme: str) -> tuple[PatternLinks, list[GridPoint]]:
    """Link both subpattern marks of every canonical pattern and emit its grid point."""
    fa = f_side.vertical if scheme == VERTICAL else f_side.bfs
    sa = s_side.vertical if scheme == VERTICAL else s_side.bfs
    a_f: list[list[tuple[int, int]]] = [[] for _ in range(fa.count + 1)]
    a_s: list[list[tuple[int, int]]] = [[] for _ in range(sa.count + 1)]
    points = []
    for i in range(dictionary.d):
        g = fa.mark_of_node[f_side.loci[i]]
        h = sa.mark_of_node[s_side.loci[i]]
        a_f[g].append((i, h))
        a_s[h].append((i, g))
        points.append(GridPoint(g, h, i))
    return PatternLinks(a_f, a_s), points
