"""Matching a dictionary of gapped patterns against a text.

Patterns have the form ``p1 {alpha,beta} p2``: two solid strings separated by
at least ``alpha`` and at most ``beta`` arbitrary symbols. After building an
index over a dictionary of such patterns, ``scan`` reports every place a
pattern ends in a text.
"""
from .dictionary import Dictionary, DictionaryError, GapBounds, GappedPattern, parse_dictionary
from .engine import GappedIndex, build_index, scan, scan_chunked
from .occurrence import Occurrence
from .oracle import naive_scan

__all__ = [
    "Dictionary",
    "DictionaryError",
    "GapBounds",
    "GappedIndex",
    "GappedPattern",
    "Occurrence",
    "build_index",
    "naive_scan",
    "parse_dictionary",
    "scan",
    "scan_chunked",
]
