import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from gapmatch.dictionary import Dictionary
from gapmatch.engine import (
    EngineStats,
    GappedIndex,
    intersect_grid,
    intersect_lookup,
    plan_chunks,
    scan,
    scan_chunked,
)
from gapmatch.generate import plant, random_dictionary, random_instance, random_text
from gapmatch.occurrence import Occurrence
from gapmatch.oracle import naive_scan
from gapmatch.suffix_tree import scan_loci

HAND = Dictionary.from_pairs([("ab", "cd"), ("a", "d")], 1, 2)
HAND_TEXT = b"abxcdxad"
HAND_RESULT = {Occurrence(1, 4, 0, 1)}


def verify(dic, text, occ):
    p1, p2 = dic.original_pairs()[occ.pattern_id - 1][1:]
    assert dic.alpha <= occ.gap <= dic.beta
    assert occ.end - occ.start + 1 == len(p1) + occ.gap + len(p2)
    assert text[occ.start:occ.start + len(p1)] == p1
    assert text[occ.end - len(p2) + 1:occ.end + 1] == p2


@pytest.mark.parametrize("backend", ["grid", "lookup"])
def test_hand_example(backend):
    idx = GappedIndex(HAND)
    assert scan(idx, HAND_TEXT, backend) == HAND_RESULT
    assert scan_chunked(idx, HAND_TEXT, backend) == HAND_RESULT


@pytest.mark.parametrize("backend", ["grid", "lookup"])
def test_no_match_and_short_texts(backend):
    idx = GappedIndex(Dictionary.from_pairs([("ab", "cd"), ("a", "d"), ("bc", "da")], 0, 3))
    assert scan(idx, b"zzzzzz", backend) == set()
    assert scan(idx, b"", backend) == set()
    assert scan(idx, b"a", backend) == set()
    assert scan(idx, b"ad", backend) == {Occurrence(2, 1, 0, 0)}


def test_backend_must_be_built():
    idx = GappedIndex(HAND, backends=("grid",))
    with pytest.raises(ValueError):
        scan(idx, HAND_TEXT, "lookup")
    with pytest.raises(ValueError):
        GappedIndex(HAND, backends=("kd",))


def test_separator_byte_in_text_is_inert():
    idx = GappedIndex(Dictionary.from_pairs([("a", "b")], 0, 1))
    for backend in ("grid", "lookup"):
        assert scan(idx, b"a\x00b", backend) == {Occurrence(1, 2, 0, 1)}
        assert scan(idx, b"\x00\x00", backend) == set()


def test_aliases_expand_at_emission():
    dic = Dictionary.from_pairs([("ab", "c"), ("x", "y"), ("ab", "c")], 0, 0)
    occ = scan(GappedIndex(dic), b"abc", "lookup")
    assert occ == {Occurrence(1, 2, 0, 0), Occurrence(3, 2, 0, 0)}


def test_smallest_gap_and_all_gaps():
    dic = Dictionary.from_pairs([("a", "b")], 0, 3)
    idx = GappedIndex(dic)
    text = b"aab"
    assert scan(idx, text) == {Occurrence(1, 2, 1, 0)}
    assert scan(idx, text, all_gaps=True) == {Occurrence(1, 2, 1, 0), Occurrence(1, 2, 0, 1)}
    assert scan(idx, text, all_gaps=True) == naive_scan(dic, text, all_gaps=True)


def per_pair_naive(dic, text, ell, f):
    """Canonical ids with p1 ending at f and p2 starting at ell."""
    return {i for i, p in enumerate(dic.patterns)
            if f - len(p.p1) + 1 >= 0 and text[f - len(p.p1) + 1:f + 1] == p.p1
            and text.startswith(p.p2, ell)}


@pytest.mark.parametrize("seed", range(3))
def test_intersections_pointwise(seed):
    rng = random.Random(seed)
    dic = random_dictionary(rng, 20, 2, 0, 2, nested=True)
    text = bytes(random_text(rng, 150, 2))
    idx = GappedIndex(dic)
    h_nodes, _ = scan_loci(idx.tree_s, text)
    g_rev, _ = scan_loci(idx.tree_f, text[::-1])
    g_nodes = g_rev[::-1]
    hits = 0
    for ell in range(len(text)):
        for f in range(max(0, ell - 4), ell):
            want = per_pair_naive(dic, text, ell, f)
            hits += bool(want)
            assert intersect_grid(idx, h_nodes[ell], g_nodes[f]) == want
            assert intersect_lookup(idx, h_nodes[ell], g_nodes[f]) == want
    assert hits > 0


@pytest.mark.parametrize("seed", range(60))
def test_random_backends_agree_with_oracle(seed):
    inst = random_instance(random.Random(seed), max_n=500, max_d=24)
    idx = GappedIndex(inst.dictionary)
    want = naive_scan(inst.dictionary, inst.text)
    stats = EngineStats()
    assert scan(idx, inst.text, "grid") == want
    got = scan(idx, inst.text, "lookup", stats=stats)
    assert got == want
    assert stats.suppressed == 0
    for occ in got:
        verify(inst.dictionary, inst.text, occ)
    assert scan(idx, inst.text, "lookup", all_gaps=True) == naive_scan(inst.dictionary, inst.text, True)


@pytest.mark.parametrize("n, m", [(0, 3), (5, 3), (6, 3), (7, 3), (40, 3), (41, 7), (100, 1)])
def test_chunk_plan_covers_every_short_interval(n, m):
    plan = plan_chunks(n, m)
    assert all(length <= 2 * m for _, length in plan.chunks)
    if n <= 2 * m:
        assert plan.chunks == [(0, n)]
    for s in range(n):
        for e in range(s, min(n, s + m)):
            assert any(off <= s and e < off + length for off, length in plan.chunks), (s, e)


def test_chunk_plan_rejects_zero_window():
    with pytest.raises(ValueError):
        plan_chunks(10, 0)


def test_hand_example_embedded_deep_in_long_text():
    m = HAND.max_span
    rng = random.Random(3)
    text = bytearray(random_text(rng, 20 * m, 2).translate(bytes.maketrans(b"ab", b"yz")))
    off = 3 * m - 2
    text[off:off + len(HAND_TEXT)] = HAND_TEXT
    text = bytes(text)
    idx = GappedIndex(HAND)
    want = {o._replace(end=o.end + off, start=o.start + off) for o in HAND_RESULT}
    for backend in ("grid", "lookup"):
        assert scan(idx, text, backend) == want
        assert scan_chunked(idx, text, backend) == want


@pytest.mark.parametrize("series", [0, 1])
def test_occurrence_straddling_chunk_boundary(series):
    dic = Dictionary.from_pairs([("abc", "cba"), ("b", "a")], 1, 3)
    m = dic.max_span
    # p1 ends just before a chunk boundary of the chosen series
    boundary = 4 * m + series * m
    text = bytearray(b"x" * (12 * m))
    s = boundary - 3
    text[s:s + 3] = b"abc"
    text[boundary + 2:boundary + 5] = b"cba"
    text = bytes(text)
    idx = GappedIndex(dic)
    want = naive_scan(dic, text)
    assert Occurrence(1, boundary + 4, s, 2) in want
    plan = plan_chunks(len(text), m)
    assert any(off == boundary for off, _ in plan.chunks)
    for backend in ("grid", "lookup"):
        assert scan_chunked(idx, text, backend) == want


@pytest.mark.parametrize("seed", range(15))
def test_chunked_equals_whole_scan(seed):
    rng = random.Random(1000 + seed)
    sigma = rng.choice([2, 4])
    alpha, beta = sorted(rng.randint(0, 5) for _ in range(2))
    dic = random_dictionary(rng, rng.randint(1, 20), sigma, alpha, beta, nested=True)
    m = dic.max_span
    text = random_text(rng, rng.randint(1, 20 * m), sigma)
    plant(rng, text, dic, 10)
    for k in range(2 * m, len(text), m):
        plant(rng, text, dic, 1, at=max(0, k - rng.randint(1, m - 1)))
    text = bytes(text)
    idx = GappedIndex(dic)
    assert scan_chunked(idx, text, "lookup") == scan(idx, text, "lookup")
    assert scan_chunked(idx, text, "grid", all_gaps=True) == scan(idx, text, "grid", all_gaps=True)


def test_concurrent_chunks_give_same_output():
    rng = random.Random(9)
    dic = random_dictionary(rng, 30, 2, 0, 3, nested=True)
    text = random_text(rng, 30 * dic.max_span, 2)
    plant(rng, text, dic, 40)
    text = bytes(text)
    idx = GappedIndex(dic)
    serial = scan_chunked(idx, text, "grid")
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = scan_chunked(idx, text, "grid", map_fn=pool.map)
    assert parallel == serial == scan(idx, text, "grid")


@pytest.mark.parametrize("seed", range(10))
def test_counters(seed):
    inst = random_instance(random.Random(500 + seed), max_n=800, max_d=32)
    dic = inst.dictionary
    n = len(inst.text)
    idx = GappedIndex(dic)
    for backend in ("grid", "lookup"):
        stats = EngineStats()
        scan(idx, inst.text, backend, stats=stats)
        assert stats.symbols == n
        assert stats.intersections <= stats.window_pairs <= n * (dic.beta - dic.alpha + 1)
        assert stats.ms_comparisons <= 4 * n
