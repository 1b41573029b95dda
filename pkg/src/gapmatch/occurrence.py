"""Occurrence records, the smallest-gap policy and output formats."""
from __future__ import annotations

import json
from typing import Iterable, NamedTuple


class Occurrence(NamedTuple):
    """A pattern match: 0-based ``end`` (last symbol of p2), ``start`` (first
    symbol of p1) and the number of don't-care symbols between them."""

    pattern_id: int
    end: int
    start: int
    gap: int


def sort_key(occ: Occurrence):
    return occ.end, occ.pattern_id, occ.start, occ.gap


def normalize(occurrences: Iterable[Occurrence], all_gaps: bool = False) -> set[Occurrence]:
    """Keep one witness per (pattern, end), the one with the smallest gap,
    unless ``all_gaps`` is set."""
    if all_gaps:
        return set(occurrences)
    best: dict[tuple[int, int], Occurrence] = {}
    for occ in occurrences:
        key = occ.pattern_id, occ.end
        cur = best.get(key)
        if cur is None or occ.gap < cur.gap:
            best[key] = occ
    return set(best.values())


def _shift(occ: Occurrence, one_based: bool) -> Occurrence:
    return occ._replace(end=occ.end + 1, start=occ.start + 1) if one_based else occ


def format_tsv(occurrences: Iterable[Occurrence], one_based: bool = False) -> str:
    lines = []
    for occ in sorted(occurrences, key=sort_key):
        occ = _shift(occ, one_based)
        lines.append(f"{occ.pattern_id}\t{occ.end}\t{occ.start}\t{occ.gap}\n")
    return "".join(lines)


def format_jsonl(occurrences: Iterable[Occurrence], one_based: bool = False) -> str:
    lines = []
    for occ in sorted(occurrences, key=sort_key):
        lines.append(json.dumps(_shift(occ, one_based)._asdict()) + "\n")
    return "".join(lines)


def parse_tsv(text: str) -> set[Occurrence]:
    out = set()
    for line in text.splitlines():
        if line:
            out.add(Occurrence(*map(int, line.split("\t"))))
    return out
