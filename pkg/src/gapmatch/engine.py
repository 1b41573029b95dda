"""Index construction and the scanning loop.

For every text position ``l`` where a second subpattern may start, the
locus of ``text[l:]`` in the tree of second subpatterns gives every p2 that
starts at ``l``; for every admissible gap the locus of the reversed prefix
ending at ``f = l - gap - 1`` in the tree of reversed first subpatterns gives
every p1 that ends at ``f``. The patterns present on both sides are found by
one of two intersection backends:

``grid``
    vertical-path marks and rectangle queries on a layered range tree
``lookup``
    BFS marks and the precomputed inter table
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import inter_table as it
from .dictionary import Dictionary, concatenate_side
from .marking import BFS, VERTICAL, MarkedTree, build_pattern_links
from .occurrence import Occurrence, normalize
from .range_grid import QueryCounter, RangeIndex
from .suffix_tree import ScanStats, build, scan_loci

BACKENDS = ("grid", "lookup")


@dataclass
class EngineStats:
    ms_comparisons: int = 0
    ms_link_hops: int = 0
    window_pairs: int = 0
    intersections: int = 0
    range_comparisons: int = 0
    link_follows: int = 0
    suppressed: int = 0
    symbols: int = 0


class GappedIndex:
    """Everything built from a dictionary. Immutable after construction.

    ``backends`` limits which intersection structures get built; the inter
    table costs O(d^2) time and space.
    """

    def __init__(self, dictionary: Dictionary, backends=BACKENDS):
        for b in backends:
            if b not in BACKENDS:
                raise ValueError(f"unknown backend {b!r}")
        self.dictionary = dictionary
        self.backends = tuple(backends)
        pats = dictionary.patterns
        self.p1_len = [len(p.p1) for p in pats]
        self.p2_len = [len(p.p2) for p in pats]
        self.tree_s = build(concatenate_side(dictionary, "second"))
        self.tree_f = build(concatenate_side(dictionary, "first")[::-1])
        self.marked_s = MarkedTree(self.tree_s, [p.p2 for p in pats])
        self.marked_f = MarkedTree(self.tree_f, [p.p1[::-1] for p in pats])
        self.range_index = None
        self.inter = None
        if "grid" in backends:
            self.grid_links, self.grid_points = build_pattern_links(
                dictionary, self.marked_f, self.marked_s, VERTICAL)
            self.range_index = RangeIndex(self.grid_points)
        if "lookup" in backends:
            self.bfs_links, self.bfs_points = build_pattern_links(
                dictionary, self.marked_f, self.marked_s, BFS)
            self.inter = it.build_inter(self.marked_f.prev, self.marked_s.prev, self.bfs_links)

    def _check_backend(self, backend):
        if backend not in self.backends:
            raise ValueError(f"backend {backend!r} was not built for this index")


def build_index(dictionary: Dictionary, backends=BACKENDS) -> GappedIndex:
    return GappedIndex(dictionary, backends)


def _grid_ids(index: GappedIndex, g_intervals, h_intervals, stats: EngineStats | None):
    report = index.range_index.report
    counter = QueryCounter() if stats is not None else None
    out = []
    for gx in g_intervals:
        for hy in h_intervals:
            out.extend(report(gx[0], gx[1], hy[0], hy[1], counter))
    if stats is not None:
        stats.range_comparisons += counter.comparisons
    return out


def _lookup_ids(index: GappedIndex, g_mark, h_mark, stats: EngineStats | None):
    if stats is None:
        return it.lookup_query(index.inter, g_mark, h_mark)
    qs = it.QueryStats()
    ids = it.lookup_query(index.inter, g_mark, h_mark, qs)
    stats.link_follows += qs.link_follows
    stats.suppressed += qs.suppressed
    return ids


def intersect_grid(index: GappedIndex, h_node: int, g_node: int) -> set[int]:
    """Canonical ids whose p2 is spelled at or above ``h_node`` in the second
    tree and whose reversed p1 at or above ``g_node`` in the first tree."""
    index._check_backend("grid")
    return set(_grid_ids(index, index.marked_f.intervals[g_node],
                         index.marked_s.intervals[h_node], None))


def intersect_lookup(index: GappedIndex, h_node: int, g_node: int) -> set[int]:
    index._check_backend("lookup")
    return set(_lookup_ids(index, index.marked_f.dma[g_node], index.marked_s.dma[h_node], None))


def scan(index: GappedIndex, text: bytes, backend: str = "grid", all_gaps: bool = False,
         stats: EngineStats | None = None) -> set[Occurrence]:
    """All occurrences of dictionary patterns in ``text`` (0-based positions).

    Without ``all_gaps`` each (pattern, end) keeps only its smallest gap.
    Bytes 0x00 in the text are legal and never match.
    """
    index._check_backend(backend)
    text = bytes(text)
    n = len(text)
    dic = index.dictionary
    alpha, beta, min_p1 = dic.alpha, dic.beta, dic.min_p1
    ms = ScanStats()
    h_nodes, _ = scan_loci(index.tree_s, text, ms)
    g_nodes_rev, _ = scan_loci(index.tree_f, text[::-1], ms)
    if backend == "grid":
        key_s, key_f = index.marked_s.intervals, index.marked_f.intervals
        intersect = _grid_ids
    else:
        key_s, key_f = index.marked_s.dma, index.marked_f.dma
        intersect = _lookup_ids
    h_keys = [key_s[v] for v in h_nodes]
    g_keys = [key_f[v] for v in reversed(g_nodes_rev)]  # g_keys[f]: reversed prefix ending at f
    p1_len, p2_len, aliases = index.p1_len, index.p2_len, dic.aliases
    found = []
    seen = set()
    window_pairs = invocations = 0
    for ell in range(min_p1 + alpha, n):
        f_hi = ell - alpha - 1
        f_lo = max(ell - beta - 1, min_p1 - 1)
        window_pairs += f_hi - f_lo + 1
        hk = h_keys[ell]
        if not hk:
            continue
        for f in range(f_hi, f_lo - 1, -1):
            gk = g_keys[f]
            if not gk:
                continue
            invocations += 1
            ids = intersect(index, gk, hk, stats)
            if not ids:
                continue
            gap = ell - f - 1
            for i in ids:
                if not all_gaps:
                    if (i, ell) in seen:
                        continue
                    seen.add((i, ell))
                end = ell + p2_len[i] - 1
                start = f - p1_len[i] + 1
                for oid in aliases[i]:
                    found.append(Occurrence(oid, end, start, gap))
    if stats is not None:
        stats.ms_comparisons += ms.comparisons
        stats.ms_link_hops += ms.link_hops
        stats.window_pairs += window_pairs
        stats.intersections += invocations
        stats.symbols += n
    return normalize(found, all_gaps)


class ChunkPlan(NamedTuple):
    m: int
    chunks: list  # (offset, length)


def plan_chunks(n: int, m: int) -> ChunkPlan:
    """Two staggered series of pieces of length 2m, starting at 0 and at m.
    Any interval of at most m symbols lies inside one piece."""
    if m <= 0:
        raise ValueError("window size must be positive")
    if n <= 2 * m:
        return ChunkPlan(m, [(0, n)])
    chunks = []
    for first in (0, m):
        for off in range(first, n, 2 * m):
            chunks.append((off, min(2 * m, n - off)))
    chunks.sort()
    return ChunkPlan(m, chunks)


def scan_chunked(index: GappedIndex, text: bytes, backend: str = "grid", all_gaps: bool = False,
                 stats: EngineStats | None = None, map_fn=map) -> set[Occurrence]:
    """Same result as ``scan`` but working on independent pieces of the text.

    ``map_fn`` may be an executor's ``map`` to scan pieces concurrently; the
    merged output does not depend on it.
    """
    text = bytes(text)
    plan = plan_chunks(len(text), index.dictionary.max_span)

    def one(chunk):
        off, length = chunk
        local = scan(index, text[off:off + length], backend, all_gaps, stats)
        return [o._replace(end=o.end + off, start=o.start + off) for o in local]

    merged = []
    for part in map_fn(one, plan.chunks):
        merged.extend(part)
    return normalize(merged, all_gaps)
