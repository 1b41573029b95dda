"""Seeded random dictionaries and texts for self-tests and benchmarks."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .dictionary import Dictionary

ALPHABET_SIZES = (2, 4, 26)
MAX_SUBPATTERN = 12


@dataclass
class Instance:
    dictionary: Dictionary
    text: bytes
    sigma: int
    planted: int
    nested: bool

    def describe(self) -> str:
        d = self.dictionary
        return (f"sigma={self.sigma} d={d.d} alpha={d.alpha} beta={d.beta} "
                f"n={len(self.text)} planted={self.planted} nested={self.nested}")


def alphabet(sigma: int) -> bytes:
    return bytes(range(ord("a"), ord("a") + sigma))


def _length(rng: random.Random, cap: int = MAX_SUBPATTERN, p: float = 0.3) -> int:
    k = 1
    while k < cap and rng.random() > p:
        k += 1
    return k


def _word(rng: random.Random, letters: bytes, k: int) -> bytes:
    return bytes(rng.choice(letters) for _ in range(k))


def random_pairs(rng: random.Random, d: int, sigma: int, nested: bool) -> list[tuple[bytes, bytes]]:
    """``d`` subpattern pairs. With ``nested`` the pools are seeded with
    suffix chains (first side) and prefix chains (second side) and drawn
    from with replacement, so shared and nested subpatterns are common."""
    letters = alphabet(sigma)
    if not nested:
        return [(_word(rng, letters, _length(rng)), _word(rng, letters, _length(rng)))
                for _ in range(d)]
    firsts: list[bytes] = []
    seconds: list[bytes] = []
    for _ in range(max(1, d // 3)):
        w = _word(rng, letters, rng.randint(2, MAX_SUBPATTERN))
        cuts = sorted(rng.sample(range(1, len(w) + 1), min(len(w), rng.randint(1, 3))))
        firsts.extend(w[-c:] for c in cuts)
        w = _word(rng, letters, rng.randint(2, MAX_SUBPATTERN))
        cuts = sorted(rng.sample(range(1, len(w) + 1), min(len(w), rng.randint(1, 3))))
        seconds.extend(w[:c] for c in cuts)
    return [(rng.choice(firsts), rng.choice(seconds)) for _ in range(d)]


def random_dictionary(rng: random.Random, d: int, sigma: int, alpha: int, beta: int,
                      nested: bool = False) -> Dictionary:
    return Dictionary.from_pairs(random_pairs(rng, d, sigma, nested), alpha, beta)


def random_text(rng: random.Random, n: int, sigma: int) -> bytearray:
    letters = alphabet(sigma)
    return bytearray(rng.choice(letters) for _ in range(n))


def plant(rng: random.Random, text: bytearray, dictionary: Dictionary, count: int,
          at: int | None = None) -> int:
    """Overwrite ``count`` random occurrences into ``text``; returns how many fit."""
    done = 0
    for _ in range(count):
        pat = rng.choice(dictionary.patterns)
        gap = rng.randint(dictionary.alpha, dictionary.beta)
        span = len(pat.p1) + gap + len(pat.p2)
        if span > len(text):
            continue
        s = at if at is not None else rng.randint(0, len(text) - span)
        s = min(s, len(text) - span)
        text[s:s + len(pat.p1)] = pat.p1
        e = s + len(pat.p1) + gap
        text[e:e + len(pat.p2)] = pat.p2
        done += 1
    return done


def random_instance(rng: random.Random, *, max_d: int = 64, max_n: int = 2000, max_beta: int = 8,
                    sigma: int | None = None, planted: bool | None = None,
                    nested: bool | None = None) -> Instance:
    sigma = sigma if sigma is not None else rng.choice(ALPHABET_SIZES)
    nested = nested if nested is not None else rng.random() < 0.5
    planted = planted if planted is not None else rng.random() < 0.5
    beta = rng.randint(0, max_beta)
    alpha = rng.randint(0, beta)
    d = rng.randint(1, max_d)
    dic = random_dictionary(rng, d, sigma, alpha, beta, nested)
    text = random_text(rng, rng.randint(0, max_n), sigma)
    count = plant(rng, text, dic, rng.randint(1, 10)) if planted else 0
    return Instance(dic, bytes(text), sigma, count, nested)
