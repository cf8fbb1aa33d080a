from math import comb

import pytest
from hypothesis import given, strategies as st

from sweeplab.errors import AlphabetError, LevelOverflowError, ShapeError
from sweeplab.paths import (
    EN, WS, canonical, enumerate_dyck, enumerate_multiset, enumerate_words, flip, format_partition,
    is_dyck, levels, mkpath_points, mkptn, mkwd, parse_partition, point_levels, rank_word, rev,
    transpose, unrank_word,
)

from oracles import all_words

words = st.text(alphabet="NE", max_size=12)
small_w = st.integers(-5, 5)


def test_path_points():
    assert mkpath_points("NE") == [(0, 0), (0, 1), (1, 1)]
    assert mkpath_points("ENEENNEE")[-1] == (5, 3)
    assert mkpath_points("") == [(0, 0)]


def test_mkptn_examples():
    assert mkptn("ENEENNEE") == (3, 3, 1)
    assert mkptn("EEENENNE") == (4, 4, 3)
    assert mkptn("NNNEEE") == ()


def test_mkwd_examples():
    assert mkwd((3, 3, 1), 3, 5) == "ENEENNEE"
    assert mkwd((), 2, 2) == "NNEE"
    w = mkwd((4, 4, 4, 2, 2, 1), 7, 10)
    assert (w.count("N"), w.count("E")) == (7, 10)
    assert mkptn(w) == (4, 4, 4, 2, 2, 1)


def test_mkwd_rejects_partition_outside_rectangle():
    with pytest.raises(ShapeError):
        mkwd((3,), 1, 2)
    with pytest.raises(ShapeError):
        mkwd((1, 1, 1), 2, 5)


def test_canonical_and_format():
    assert canonical((2, 1, 0, 0)) == (2, 1)
    with pytest.raises(ShapeError):
        canonical((1, 2))
    assert parse_partition("4,4,4,2,2,1") == (4, 4, 4, 2, 2, 1)
    assert parse_partition("") == ()
    assert format_partition((8, 6, 4, 2)) == "8,6,4,2"
    assert format_partition(()) == ""


def test_levels_golden_5_3():
    assert levels("ENEENNEE", (5, -3)) == [-3, 2, -1, -4, 1, 6, 3, 0]


def test_point_levels_golden():
    assert point_levels("NNENE", (8, -5)) == [0, 8, 16, 11, 19, 14]


def test_ws_levels_are_shifted_en_levels():
    w = "ENEENNEE"
    en, ws = levels(w, (5, -3), EN), levels(w, (5, -3), WS)
    assert ws == [e - (5 if c == "N" else -3) for c, e in zip(w, en)]


def test_zero_weights():
    assert levels("NENNE", (0, 0)) == [0] * 5


def test_level_overflow_rejected():
    with pytest.raises(LevelOverflowError):
        levels("NN", (2**62, 0))


def test_is_dyck_examples():
    assert is_dyck("NNEE", (1, -1))
    assert not is_dyck("ENNE", (1, -1))
    assert not is_dyck("ENEENNEE", (5, -3))


def test_rev_flip_examples():
    assert rev("NEE") == "EEN"
    assert flip("NEE") == "ENN"
    with pytest.raises(AlphabetError):
        flip("NDE")
    with pytest.raises(AlphabetError):
        mkptn("NXE")


def test_flip_rev_transposes():
    for a in range(4):
        for b in range(4):
            for w in enumerate_words(a, b):
                assert mkptn(flip(rev(w))) == transpose(mkptn(w))


def test_enumerate_words_order_and_count():
    assert list(enumerate_words(1, 1)) == ["EN", "NE"]
    assert len(list(enumerate_words(3, 3))) == 20
    for a in range(7):
        for b in range(13 - a):
            ws = list(enumerate_words(a, b))
            assert len(ws) == len(set(ws)) == comb(a + b, a)
            assert ws == sorted(ws)


def test_enumerate_multiset_matches_permutations():
    counts = {"N": 2, "D": 1, "E": 2}
    assert sorted(enumerate_multiset(counts)) == all_words(counts)
    # declared alphabet order drives the lexicographic order
    assert list(enumerate_multiset({"N": 1, "D": 1, "E": 1}, "NDE"))[:2] == ["NDE", "NED"]


def test_enumerate_dyck_counts():
    assert len(list(enumerate_dyck(3, 3, (1, -1)))) == 5
    assert len(list(enumerate_dyck(2, 3, (3, -2)))) == 2
    assert list(enumerate_dyck(0, 3, (1, -1))) == []
    assert list(enumerate_dyck(0, 0, (1, -1))) == [""]
    for a, b in [(3, 4), (4, 3), (3, 5)]:
        got = list(enumerate_dyck(a, b, (b, -a)))
        assert len(got) == comb(a + b, a) // (a + b)
        assert got == [w for w in enumerate_words(a, b) if is_dyck(w, (b, -a))]


def test_mk_round_trips_exhaustive():
    for a in range(7):
        for b in range(7):
            if a + b <= 10:
                for w in enumerate_words(a, b):
                    assert mkwd(mkptn(w), a, b) == w


def test_rank_unrank():
    for a, b in [(0, 0), (2, 3), (4, 4)]:
        for i, w in enumerate(enumerate_words(a, b)):
            assert rank_word(w) == i
            assert unrank_word(a, b, i) == w


@given(words)
def test_involutions(w):
    assert rev(rev(w)) == w
    assert flip(flip(w)) == w


@given(words, small_w, small_w)
def test_final_level_telescopes(w, r, s):
    lv = levels(w, (r, s))
    if w:
        assert lv[-1] == r * w.count("N") + s * w.count("E")


@given(st.lists(st.integers(0, 6), max_size=6), st.integers(0, 6), st.integers(0, 6))
def test_partition_round_trip(parts, extra_a, extra_b):
    pi = tuple(sorted(parts, reverse=True))
    a = len(pi) + extra_a
    b = (pi[0] if pi else 0) + extra_b
    assert mkptn(mkwd(pi, a, b)) == canonical(pi)
