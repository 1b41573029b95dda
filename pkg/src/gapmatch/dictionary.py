"""Single-gap dictionaries: parsing, validation and canonical form.

A dictionary file looks like::

    # comment lines start with '#'
    1 2
    ab<TAB>cd
    a<TAB>d

The first non-comment line holds the gap bounds ``alpha beta``; every other
non-empty line is one pattern ``p1 {alpha,beta} p2``. Pattern ids are the
1-based order of pattern lines. Duplicate ``(p1, p2)`` lines collapse into a
single canonical pattern that remembers every original id.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Sequence, Union

SEPARATOR = 0x00
TAB = 0x09


class DictionaryError(ValueError):
    """Base class for dictionary parse errors; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderError(DictionaryError):
    pass


class GapBoundsError(DictionaryError):
    pass


class MalformedLineError(DictionaryError):
    pass


class EmptySubpatternError(DictionaryError):
    pass


class ForbiddenByteError(DictionaryError):
    pass


class EmptyDictionaryError(DictionaryError):
    pass


@dataclass(frozen=True)
class GapBounds:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise GapBoundsError(f"negative gap bound ({self.alpha}, {self.beta})")
        if self.alpha > self.beta:
            raise GapBoundsError(f"alpha > beta ({self.alpha} > {self.beta})")


@dataclass(frozen=True)
class GappedPattern:
    original_id: int
    p1: bytes
    p2: bytes


@dataclass(frozen=True)
class Dictionary:
    """Canonical dictionary. ``patterns[c]`` is canonical pattern ``c`` (0-based);
    ``aliases[c]`` lists the original 1-based ids that spelled it."""

    patterns: tuple[GappedPattern, ...]
    aliases: tuple[tuple[int, ...], ...]
    bounds: GapBounds
    d: int = field(init=False)
    total_len: int = field(init=False)
    min_p1: int = field(init=False)
    max_span: int = field(init=False)

    def __post_init__(self):
        if not self.patterns:
            raise EmptyDictionaryError("dictionary has no patterns")
        set_ = object.__setattr__
        set_(self, "d", len(self.patterns))
        set_(self, "total_len", sum(len(p.p1) + len(p.p2) for p in self.patterns))
        set_(self, "min_p1", min(len(p.p1) for p in self.patterns))
        set_(self, "max_span", max(len(p.p1) + len(p.p2) for p in self.patterns) + self.bounds.beta)

    @property
    def alpha(self) -> int:
        return self.bounds.alpha

    @property
    def beta(self) -> int:
        return self.bounds.beta

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], alpha: int, beta: int) -> "Dictionary":
        """Build from ``(p1, p2)`` pairs (bytes or str); original ids are 1..len(pairs)."""
        bounds = GapBounds(alpha, beta)
        raw = []
        for k, (p1, p2) in enumerate(pairs, start=1):
            p1, p2 = _as_bytes(p1), _as_bytes(p2)
            _check_subpattern(p1, k)
            _check_subpattern(p2, k)
            raw.append((k, p1, p2))
        return _canonicalize(raw, bounds)

    def original_pairs(self) -> list[tuple[int, bytes, bytes]]:
        """``(original_id, p1, p2)`` for every input line, sorted by id."""
        out = []
        for pat, ids in zip(self.patterns, self.aliases):
            out.extend((i, pat.p1, pat.p2) for i in ids)
        return sorted(out)

    def serialize(self) -> bytes:
        lines = [f"{self.alpha} {self.beta}".encode()]
        lines.extend(p1 + b"\t" + p2 for _, p1, p2 in self.original_pairs())
        return b"\n".join(lines) + b"\n"


def _as_bytes(s: Union[str, bytes]) -> bytes:
    return s.encode("utf-8") if isinstance(s, str) else bytes(s)


def _check_subpattern(p: bytes, line: int | None) -> None:
    if not p:
        raise EmptySubpatternError("empty subpattern", line)
    if SEPARATOR in p:
        raise ForbiddenByteError("subpattern contains the reserved 0x00 byte", line)
    if TAB in p:
        raise ForbiddenByteError("subpattern contains TAB", line)


def _canonicalize(raw: Sequence[tuple[int, bytes, bytes]], bounds: GapBounds) -> Dictionary:
    if not raw:
        raise EmptyDictionaryError("dictionary has no patterns")
    first: dict[tuple[bytes, bytes], int] = {}
    patterns: list[GappedPattern] = []
    aliases: list[list[int]] = []
    for oid, p1, p2 in raw:
        c = first.get((p1, p2))
        if c is None:
            first[(p1, p2)] = len(patterns)
            patterns.append(GappedPattern(oid, p1, p2))
            aliases.append([oid])
        else:
            aliases[c].append(oid)
    return Dictionary(tuple(patterns), tuple(tuple(a) for a in aliases), bounds)


def parse_dictionary(source: Union[bytes, str, BinaryIO]) -> Dictionary:
    """Parse the dictionary file format from bytes, text or a binary stream."""
    if isinstance(source, str):
        data = source.encode("utf-8")
    elif isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
    bounds = None
    raw = []
    lineno = 0
    for lineno, line in enumerate(data.split(b"\n"), start=1):
        if line.endswith(b"\r"):
            line = line[:-1]
        if not line or line.startswith(b"#"):
            continue
        if bounds is None:
            bounds = _parse_header(line, lineno)
            continue
        p1, tab, p2 = line.partition(b"\t")
        if not tab:
            raise MalformedLineError("expected '<p1>\\t<p2>'", lineno)
        _check_subpattern(p1, lineno)
        _check_subpattern(p2, lineno)
        raw.append((len(raw) + 1, p1, p2))
    if bounds is None:
        raise HeaderError("missing '<alpha> <beta>' header", max(lineno, 1))
    if not raw:
        raise EmptyDictionaryError("dictionary has no patterns", lineno)
    return _canonicalize(raw, bounds)


def _parse_header(line: bytes, lineno: int) -> GapBounds:
    parts = line.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise HeaderError(f"malformed header {line!r}, expected '<alpha> <beta>'", lineno)
    alpha, beta = int(parts[0]), int(parts[1])
    if alpha > beta:
        raise GapBoundsError(f"alpha > beta ({alpha} > {beta})", lineno)
    return GapBounds(alpha, beta)


def concatenate_side(dictionary: Dictionary, side: str) -> bytes:
    """Join every canonical pattern's ``side`` subpattern ('first' or 'second')
    with a single separator byte between consecutive subpatterns."""
    if side == "first":
        parts = [p.p1 for p in dictionary.patterns]
    elif side == "second":
        parts = [p.p2 for p in dictionary.patterns]
    else:
        raise ValueError(f"side must be 'first' or 'second', not {side!r}")
    return bytes([SEPARATOR]).join(parts)
