"""Dense lookup table over pairs of BFS marks.

Cell ``(g, h)`` stands for every pattern whose first-subpattern mark is an
ancestor-or-self of ``g`` and whose second-subpattern mark is an
ancestor-or-self of ``h``. Each cell stores at most one pattern index and
three links:

* ``up``   -> ``(g', h)``: nearest ``g'`` above ``g`` with an index in column ``h``
* ``left`` -> ``(g, h')``: nearest ``h'`` above ``h`` with an index in row ``g``
* ``prev`` -> ``(g*, h*)``: nearest pair of strict ancestors whose cell holds
  an index or an up/left link

Marks are 1-based; row and column 0 exist only as padding and every link
value 0 means null. ``index`` uses -1 for null.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .marking import PatternLinks

NULL = 0


@dataclass
class QueryStats:
    link_follows: int = 0
    emitted: int = 0
    suppressed: int = 0


@dataclass
class InterTable:
    index: np.ndarray
    up: np.ndarray
    left: np.ndarray
    prev_g: np.ndarray
    prev_h: np.ndarray
    prev_f_marks: np.ndarray
    prev_s_marks: np.ndarray
    fill_ops: int = 0

    @property
    def shape(self) -> tuple[int, int]:
        """``(mF, mS)``: marked-node counts of the two trees."""
        return self.index.shape[0] - 1, self.index.shape[1] - 1

    def cell(self, g: int, h: int) -> dict:
        up, left, pg = int(self.up[g, h]), int(self.left[g, h]), int(self.prev_g[g, h])
        idx = int(self.index[g, h])
        return {
            "index": None if idx < 0 else idx,
            "up": (up, h) if up else None,
            "left": (g, left) if left else None,
            "prev": (pg, int(self.prev_h[g, h])) if pg else None,
        }


def _levels(prev: np.ndarray) -> list[np.ndarray]:
    """Group marks 1..m by the number of marked proper ancestors."""
    m = len(prev) - 1
    level = np.zeros(m + 1, dtype=np.int64)
    for x in range(1, m + 1):  # BFS marks: prev[x] < x
        p = prev[x]
        level[x] = level[p] + 1 if p else 0
    marks = np.arange(1, m + 1)
    return [marks[level[1:] == k] for k in range(int(level[1:].max()) + 1)] if m else []


def build_inter(prev_f: list[int], prev_s: list[int], links: PatternLinks) -> InterTable:
    """Fill the table from BFS-numbered marks.

    ``prev_f[g]`` / ``prev_s[h]`` give the nearest marked proper ancestor mark
    (0 when none). Rows are filled in increasing ``g``; inside a row the up
    and prev rules read only the already finished row ``prev(g)``, and the
    left rule reads column ``prev(h)`` of the same row, so columns are
    processed in order of ancestor depth.
    """
    mf, ms = len(prev_f) - 1, len(prev_s) - 1
    pf = np.asarray(prev_f, dtype=np.int32)
    ps = np.asarray(prev_s, dtype=np.int32)
    if np.any(pf[1:] >= np.arange(1, mf + 1)) or np.any(ps[1:] >= np.arange(1, ms + 1)):
        raise ValueError("marks are not BFS ordered: an ancestor has a larger mark")
    shape = (mf + 1, ms + 1)
    index = np.full(shape, -1, dtype=np.int32)
    up = np.zeros(shape, dtype=np.int32)
    left = np.zeros(shape, dtype=np.int32)
    prev_g = np.zeros(shape, dtype=np.int32)
    prev_h = np.zeros(shape, dtype=np.int32)
    ops = 0
    for g, entries in enumerate(links.a_f):
        for i, h in entries:
            if index[g, h] >= 0:
                raise ValueError(f"two patterns share the mark pair ({g}, {h})")
            index[g, h] = i
            ops += 1
    col_levels = _levels(ps)
    cols = np.arange(1, ms + 1)
    has_ph = ps[1:] != NULL
    ph = ps[1:][has_ph]
    ph_cols = cols[has_ph]
    for g in range(1, mf + 1):
        pg = int(pf[g])
        if pg:
            # up rule
            up[g, 1:] = np.where(index[pg, 1:] >= 0, pg, up[pg, 1:])
            # prev rule
            tgt_info = (index[pg, ph] >= 0) | (up[pg, ph] != NULL) | (left[pg, ph] != NULL)
            prev_g[g, ph_cols] = np.where(tgt_info, pg, prev_g[pg, ph])
            prev_h[g, ph_cols] = np.where(tgt_info, ph, prev_h[pg, ph])
        # left rule, one ancestor-depth layer at a time
        row_index, row_left = index[g], left[g]
        for layer in col_levels[1:]:
            above = ps[layer]
            row_left[layer] = np.where(row_index[above] >= 0, above, row_left[above])
        ops += 3 * ms
    return InterTable(index, up, left, prev_g, prev_h, pf, ps, ops)


def lookup_query(table: InterTable, g: int | None, h: int | None,
                 stats: QueryStats | None = None) -> list[int]:
    """Pattern ids with first mark ancestor-or-self of ``g`` and second mark
    ancestor-or-self of ``h``.

    Follows the cell's index, then its prev link (recursively), then the up
    chain and the left chain. Emissions pass through a set so a repeated id
    would be dropped; ``stats.suppressed`` counts any such drop.
    """
    if not g or not h:
        return []
    index, up, left = table.index, table.up, table.left
    prev_g, prev_h = table.prev_g, table.prev_h
    seen: set[int] = set()
    out: list[int] = []
    follows = suppressed = 0

    def emit(i):
        nonlocal suppressed
        if i in seen:
            suppressed += 1
        else:
            seen.add(i)
            out.append(i)

    # the prev recursion is a chain; walk it iteratively
    while True:
        i = index[g, h]
        if i >= 0:
            emit(int(i))
        gg = g
        while up[gg, h]:
            gg = int(up[gg, h])
            follows += 1
            emit(int(index[gg, h]))
        hh = h
        while left[g, hh]:
            hh = int(left[g, hh])
            follows += 1
            emit(int(index[g, hh]))
        pg = int(prev_g[g, h])
        if not pg:
            break
        g, h = pg, int(prev_h[g, h])
        follows += 1
    if stats is not None:
        stats.link_follows += follows
        stats.emitted += len(out)
        stats.suppressed += suppressed
    return out
