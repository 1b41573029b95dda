from gapmatch.dictionary import Dictionary
from gapmatch.occurrence import Occurrence, format_jsonl, format_tsv, normalize, parse_tsv
from gapmatch.oracle import naive_scan


def test_hand_example():
    dic = Dictionary.from_pairs([("ab", "cd"), ("a", "d")], 1, 2)
    assert naive_scan(dic, b"abxcdxad") == {Occurrence(1, 4, 0, 1)}


def test_empty_text():
    dic = Dictionary.from_pairs([("a", "b")], 0, 5)
    assert naive_scan(dic, b"") == set()


def test_adjacent_subpatterns():
    dic = Dictionary.from_pairs([("a", "a")], 0, 0)
    assert naive_scan(dic, b"aa") == {Occurrence(1, 1, 0, 0)}


def test_overlapping_starts_are_all_found():
    dic = Dictionary.from_pairs([("aa", "b")], 0, 0)
    assert naive_scan(dic, b"aaab") == {Occurrence(1, 3, 1, 0)}
    dic = Dictionary.from_pairs([("aa", "a")], 0, 2)
    assert naive_scan(dic, b"aaaa", all_gaps=True) == {
        Occurrence(1, 2, 0, 0), Occurrence(1, 3, 1, 0), Occurrence(1, 3, 0, 1)}


def test_normalize_keeps_smallest_gap():
    occ = [Occurrence(1, 9, 3, 2), Occurrence(1, 9, 4, 1), Occurrence(2, 9, 0, 3)]
    assert normalize(occ) == {Occurrence(1, 9, 4, 1), Occurrence(2, 9, 0, 3)}
    assert normalize(occ, all_gaps=True) == set(occ)


def test_formats():
    occ = {Occurrence(2, 5, 1, 0), Occurrence(1, 5, 0, 1), Occurrence(1, 3, 0, 0)}
    tsv = format_tsv(occ)
    assert tsv == "1\t3\t0\t0\n1\t5\t0\t1\n2\t5\t1\t0\n"
    assert parse_tsv(tsv) == occ
    assert format_tsv({Occurrence(1, 4, 0, 1)}, one_based=True) == "1\t5\t1\t1\n"
    assert format_jsonl({Occurrence(1, 4, 0, 1)}) == \
        '{"pattern_id": 1, "end": 4, "start": 0, "gap": 1}\n'
