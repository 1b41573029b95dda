"""Suffix trees over separator-joined subpattern strings.

Nodes live in parallel lists indexed by node id (root is 0). Internally the
indexed bytes are lifted to integer symbols so that the separator and the
end-of-string terminal sit outside the byte range: a query byte can never
match either of them, including a literal 0x00 in the query.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .dictionary import SEPARATOR

SEP = 256
END = 257


class Locus(NamedTuple):
    node: int
    match_len: int


@dataclass
class ScanStats:
    """Work counters for one matching-statistics pass."""

    comparisons: int = 0
    link_hops: int = 0
    node_hops: int = 0


class SuffixTree:
    """Suffix tree of ``text`` (bytes, 0x00 acting as separator).

    Attributes are parallel per-node lists: ``parent``, ``start``/``end``
    (edge label is ``seq[start:end]``), ``children`` (symbol -> node),
    ``link`` (suffix link, -1 where undefined), ``depth`` (string depth) and
    ``level`` (edge count from the root).
    """

    root = 0

    def __init__(self, text: bytes):
        if not text:
            raise ValueError("cannot build a suffix tree of an empty string")
        self.text = bytes(text)
        self.seq = [SEP if b == SEPARATOR else b for b in self.text]
        self.seq.append(END)
        self.split_nodes: list[int] = []
        self.is_split = False
        self._ukkonen()
        self._index_parents()

    def __len__(self):
        return len(self.parent)

    def _new(self, start: int, end: int) -> int:
        self.start.append(start)
        self.end.append(end)
        self.children.append({})
        self.link.append(0)
        return len(self.start) - 1

    def _ukkonen(self):
        seq = self.seq
        inf = len(seq) + 1
        self.start, self.end, self.children, self.link = [-1], [-1], [{}], [-1]
        start, end, children, link = self.start, self.end, self.children, self.link
        node, edge, length, remainder = 0, 0, 0, 0
        for i, c in enumerate(seq):
            remainder += 1
            last = -1
            while remainder:
                if length == 0:
                    edge = i
                nxt = children[node].get(seq[edge])
                if nxt is None:
                    children[node][seq[edge]] = self._new(i, inf)
                    if last != -1:
                        link[last] = node
                        last = -1
                else:
                    elen = min(end[nxt], i + 1) - start[nxt]
                    if length >= elen:
                        edge += elen
                        length -= elen
                        node = nxt
                        continue
                    if seq[start[nxt] + length] == c:
                        if last != -1 and node != 0:
                            link[last] = node
                        length += 1
                        break
                    mid = self._new(start[nxt], start[nxt] + length)
                    children[node][seq[edge]] = mid
                    children[mid][c] = self._new(i, inf)
                    start[nxt] += length
                    children[mid][seq[start[nxt]]] = nxt
                    if last != -1:
                        link[last] = mid
                    last = mid
                remainder -= 1
                if node == 0 and length > 0:
                    length -= 1
                    edge = i - remainder + 1
                elif node != 0:
                    node = link[node]
        n = len(seq)
        for v in range(1, len(end)):
            if end[v] == inf:
                end[v] = n
                link[v] = -1

    def split_boundaries(self) -> None:
        if self.is_split:
            return
        self.split_nodes = self._split_boundaries()
        self._index_parents()
        for w in self.split_nodes:
            self.link[w] = self._split_link(w)
        self.is_split = True

    def _index_parents(self):
        size = len(self.start)
        self.parent = [-1] * size
        self.depth = [0] * size
        self.level = [0] * size
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.children[u].values():
                self.parent[v] = u
                self.depth[v] = self.depth[u] + self.end[v] - self.start[v]
                self.level[v] = self.level[u] + 1
                stack.append(v)

    def _split_boundaries(self) -> list[int]:
        """Give every subpattern an explicit locus: any edge below a
        separator-free path whose label holds a boundary symbol after its
        first position is cut just before that boundary."""
        seq = self.seq
        next_boundary = [0] * (len(seq) + 1)
        nb = len(seq)
        for k in range(len(seq) - 1, -1, -1):
            if seq[k] >= SEP:
                nb = k
            next_boundary[k] = nb
        created = []
        stack = [0]
        while stack:
            u = stack.pop()
            for sym, v in list(self.children[u].items()):
                s, e = self.start[v], self.end[v]
                j = next_boundary[s]
                if j == s:
                    continue
                if j < e:
                    w = self._new(s, j)
                    self.link[w] = -1
                    self.children[u][sym] = w
                    self.start[v] = j
                    self.children[w][seq[j]] = v
                    created.append(w)
                else:
                    stack.append(v)
        return created

    def _split_link(self, w: int) -> int:
        u = self.parent[w]
        s, e = self.start[w], self.end[w]
        if u == 0:
            s += 1
            target = 0
        else:
            target = self.link[u]
        node, rest = self.descend(target, self.seq, s, e - s)
        if rest:
            raise AssertionError(f"suffix link of split node {w} lands mid-edge")
        return node

    def descend(self, node: int, symbols, pos: int, count: int) -> tuple[int, int]:
        """Skip/count descent of ``symbols[pos:pos+count]`` from ``node``, which
        must be spelled in the tree. Returns ``(deepest node reached, leftover)``
        where a nonzero leftover means the walk stops inside the next edge."""
        children, start, end = self.children, self.start, self.end
        while count:
            child = children[node][symbols[pos]]
            elen = end[child] - start[child]
            if elen > count:
                break
            node = child
            pos += elen
            count -= elen
        return node, count

    # -- introspection helpers -------------------------------------------------

    def edge(self, v: int) -> tuple[int, int]:
        return self.start[v], self.end[v]

    def edge_label(self, v: int) -> bytes:
        """Edge label into ``v`` rendered with '$' for separators, terminal dropped."""
        return _render(self.seq[self.start[v]:self.end[v]])

    def path_label(self, v: int) -> bytes:
        parts = []
        while v > 0:
            parts.append(self.seq[self.start[v]:self.end[v]])
            v = self.parent[v]
        return _render([s for part in reversed(parts) for s in part])

    def leaves(self) -> list[int]:
        return [v for v in range(1, len(self)) if not self.children[v]]

    def is_clean(self, v: int) -> bool:
        """True if the root path to ``v`` contains no separator or terminal."""
        while v > 0:
            if any(s >= SEP for s in self.seq[self.start[v]:self.end[v]]):
                return False
            v = self.parent[v]
        return True


def _render(symbols) -> bytes:
    return bytes(ord("$") if s == SEP else s for s in symbols if s != END)


def build(text: bytes, split: bool = True) -> SuffixTree:
    """Suffix tree of ``text``; with ``split`` the separator edges are cut too."""
    tree = SuffixTree(text)
    if split:
        tree.split_boundaries()
    return tree


def split_separator_edges(tree: SuffixTree) -> SuffixTree:
    """Cut edges so that every maximal separator-free prefix ends on a node.
    Mutates and returns ``tree``; idempotent."""
    tree.split_boundaries()
    return tree


def scan_loci(tree: SuffixTree, query: bytes, stats: ScanStats | None = None) -> tuple[list[int], list[int]]:
    """Matching statistics of ``query`` against ``tree``.

    Returns parallel lists ``(nodes, lengths)``: ``lengths[p]`` is the longest
    prefix of ``query[p:]`` spelled from the root and ``nodes[p]`` the deepest
    explicit node at string depth <= ``lengths[p]``.
    """
    n = len(query)
    nodes = [0] * n
    lengths = [0] * n
    children, start, end, seq = tree.children, tree.start, tree.end, tree.seq
    depth, link = tree.depth, tree.link
    comparisons = link_hops = node_hops = 0
    node = 0  # deepest explicit node of the current match
    child = -1  # edge being walked, -1 when sitting on ``node``
    off = 0  # symbols consumed on ``child``'s edge
    length = 0
    for p in range(n):
        # extend the match of query[p:] as far as the tree allows
        q = p + length
        while q < n:
            comparisons += 1
            x = query[q]
            if off == 0:
                nxt = children[node].get(x)
                if nxt is None:
                    break
                child = nxt
                off = 1
            elif seq[start[child] + off] == x:
                off += 1
            else:
                break
            q += 1
            length += 1
            if off == end[child] - start[child]:
                node, child, off = child, -1, 0
                node_hops += 1
        nodes[p] = node
        lengths[p] = length
        if length == 0:
            continue
        # move to the locus of query[p+1 : p+length]
        length -= 1
        if node == 0:
            rescan_from, rest = p + 1, length
        else:
            rescan_from, rest = p + depth[node], length - depth[node] + 1
            node = link[node]
            link_hops += 1
        # skip/count down to the deepest explicit node
        pos = rescan_from
        child, off = -1, 0
        while rest:
            nxt = children[node][query[pos]]
            elen = end[nxt] - start[nxt]
            if elen > rest:
                child, off = nxt, rest
                break
            node = nxt
            pos += elen
            rest -= elen
            node_hops += 1
    if stats is not None:
        stats.comparisons += comparisons
        stats.link_hops += link_hops
        stats.node_hops += node_hops
    return nodes, lengths


def matching_statistics(tree: SuffixTree, query: bytes, stats: ScanStats | None = None) -> list[Locus]:
    nodes, lengths = scan_loci(tree, query, stats)
    return [Locus(v, k) for v, k in zip(nodes, lengths)]
