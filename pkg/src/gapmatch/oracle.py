"""Brute-force reference matcher. Slow on purpose; shares only the output
normalization with the engine."""
from __future__ import annotations

from .dictionary import Dictionary
from .occurrence import Occurrence, normalize


def _starts(text: bytes, sub: bytes):
    k = text.find(sub)
    while k >= 0:
        yield k
        k = text.find(sub, k + 1)


def naive_scan(dictionary: Dictionary, text: bytes, all_gaps: bool = False) -> set[Occurrence]:
    text = bytes(text)
    alpha, beta = dictionary.alpha, dictionary.beta
    found = []
    for oid, p1, p2 in dictionary.original_pairs():
        for s in _starts(text, p1):
            for gap in range(alpha, beta + 1):
                ell = s + len(p1) + gap
                if text.startswith(p2, ell):
                    found.append(Occurrence(oid, ell + len(p2) - 1, s, gap))
    return normalize(found, all_gaps)
