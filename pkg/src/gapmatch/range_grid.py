"""Static 2D orthogonal range reporting (layered range tree).

Points are sorted by x and split into a balanced binary tree over that order.
Every tree node keeps its points sorted by y together with cascading pointers
into both children, so a query binary-searches y once at the root and then
walks O(log d) nodes in O(1) each before reporting. Query cost is
O(log d + occ); build time and space are O(d log d).
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .marking import GridPoint


@dataclass
class QueryCounter:
    comparisons: int = 0


class RangeIndex:
    def __init__(self, points: Iterable[GridPoint]):
        pts = sorted((int(p[0]), int(p[1]), p[2]) for p in points)
        seen = set()
        for x, y, _ in pts:
            if (x, y) in seen:
                raise ValueError(f"duplicate grid point ({x}, {y})")
            seen.add((x, y))
        self.size = len(pts)
        # per tree node: x range, y-sorted ys / payloads, cascade pointers, children
        self.xmin: list[int] = []
        self.xmax: list[int] = []
        self.ys: list[list[int]] = []
        self.payloads: list[list] = []
        self.to_left: list[list[int]] = []
        self.to_right: list[list[int]] = []
        self.left: list[int] = []
        self.right: list[int] = []
        if pts:
            self._build(pts, 0, len(pts))

    def _build(self, pts: Sequence[tuple], lo: int, hi: int) -> int:
        k = len(self.xmin)
        for arr in (self.xmin, self.xmax, self.ys, self.payloads, self.to_left,
                    self.to_right, self.left, self.right):
            arr.append(None)
        self.xmin[k] = pts[lo][0]
        self.xmax[k] = pts[hi - 1][0]
        if hi - lo == 1:
            _, y, payload = pts[lo]
            self.ys[k], self.payloads[k] = [y], [payload]
            self.left[k] = self.right[k] = -1
            return k
        mid = (lo + hi) // 2
        a = self._build(pts, lo, mid)
        b = self._build(pts, mid, hi)
        self.left[k], self.right[k] = a, b
        ys, pay, ta, tb = _merge(self.ys[a], self.payloads[a], self.ys[b], self.payloads[b])
        self.ys[k], self.payloads[k], self.to_left[k], self.to_right[k] = ys, pay, ta, tb
        return k

    def report(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int,
               counter: QueryCounter | None = None) -> list:
        """Payloads of all points in the closed rectangle [x_lo,x_hi] x [y_lo,y_hi]."""
        if not self.size:
            return []
        xmin, xmax, ys, payloads = self.xmin, self.xmax, self.ys, self.payloads
        to_left, to_right, left, right = self.to_left, self.to_right, self.left, self.right
        out = []
        ops = 0
        root_ys = ys[0]
        pos = bisect_left(root_ys, y_lo)
        ops += max(1, len(root_ys).bit_length())
        stack = [(0, pos)]
        while stack:
            k, pos = stack.pop()
            ops += 1
            if xmax[k] < x_lo or xmin[k] > x_hi:
                continue
            if x_lo <= xmin[k] and xmax[k] <= x_hi:
                kys = ys[k]
                kp = payloads[k]
                while pos < len(kys) and kys[pos] <= y_hi:
                    out.append(kp[pos])
                    pos += 1
                    ops += 1
                continue
            stack.append((right[k], to_right[k][pos]))
            stack.append((left[k], to_left[k][pos]))
        if counter is not None:
            counter.comparisons += ops
        return out


def _merge(ya, pa, yb, pb):
    """Merge two y-sorted lists; return merged ys/payloads and, for every
    position of the merged list (plus one past the end), the index of the
    first element >= that y in each child."""
    ys, pay, ta, tb = [], [], [], []
    i = j = 0
    while i < len(ya) or j < len(yb):
        ta.append(i)
        tb.append(j)
        if j == len(yb) or (i < len(ya) and ya[i] <= yb[j]):
            ys.append(ya[i])
            pay.append(pa[i])
            i += 1
        else:
            ys.append(yb[j])
            pay.append(pb[j])
            j += 1
    ta.append(i)
    tb.append(j)
    return ys, pay, ta, tb


def build_range_index(points: Iterable[GridPoint]) -> RangeIndex:
    return RangeIndex(points)


def report(index: RangeIndex, x_lo: int, x_hi: int, y_lo: int, y_hi: int,
           counter: QueryCounter | None = None) -> list:
    return index.report(x_lo, x_hi, y_lo, y_hi, counter)
