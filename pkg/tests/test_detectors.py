from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from addiword import (
    RangeError, find_abelian_square, find_additive_power, min_discrepancy_scan,
)
from addiword.detectors import is_additive_power_at
from oracles import all_adjacent_gaps, first_by_end, first_by_start, naive_abelian_squares, naive_additive_power

from conftest import PAPER_WORD


def test_paper_additive_square():
    loc = find_additive_power(PAPER_WORD, 2, 1)
    assert (loc.start, loc.half_len, loc.block_sums) == (1, 3, (9, 9))
    assert [PAPER_WORD[f.start:f.stop] for f in loc.blocks] == [(1, 3, 5), (1, 2, 6)]


def test_trivial_additive_square():
    loc = find_additive_power([1, 1])
    assert (loc.start, loc.half_len) == (0, 1)


def test_no_additive_cube():
    # brute force over all block triples: none
    assert naive_additive_power([1, 2, 3, 7], 3) == []
    assert find_additive_power([1, 2, 3, 7], 3) is None


def test_min_half_len_respected():
    loc = find_additive_power([1, 1, 2, 3, 1, 4], 2, 2)
    assert loc.half_len >= 2


def test_abelian_examples():
    loc = find_abelian_square([1, 2, 2, 1])
    assert (loc.start, loc.half_len) == (0, 2)
    assert find_abelian_square([1, 2]) is None
    assert naive_abelian_squares(PAPER_WORD) == []
    assert find_abelian_square(PAPER_WORD) is None


def test_min_discrepancy_examples():
    rep = min_discrepancy_scan(PAPER_WORD, 3)
    assert (rep.discrepancy, rep.u.start) == (0, 1)
    rep = min_discrepancy_scan(PAPER_WORD, 1)
    assert min(all_adjacent_gaps(PAPER_WORD, 1)) == (1, 0)
    assert (rep.discrepancy, rep.u.start) == (1, 0)
    with pytest.raises(RangeError):
        min_discrepancy_scan([1], 1)


@pytest.mark.parametrize("n", range(0, 13))
def test_binary_words_match_naive(n):
    for w in product((1, 2), repeat=n):
        for p in (2, 3):
            loc = find_additive_power(w, p)
            expected = first_by_end(naive_additive_power(w, p), p)
            assert (None if loc is None else (loc.start, loc.half_len)) == expected


@pytest.mark.parametrize("n", range(0, 15))
def test_two_letter_alphabet_detectors_agree(n):
    for w in product((3, 7), repeat=n):
        add = {h for h in naive_additive_power(w, 2)}
        ab = first_by_start(naive_abelian_squares(w))
        loc = find_abelian_square(w)
        assert (None if loc is None else (loc.start, loc.half_len)) == ab
        assert set(naive_abelian_squares(w)) == add


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 5), max_size=30), st.integers(1, 3))
def test_random_words_match_naive(w, m):
    loc = find_additive_power(w, 2, m)
    assert (None if loc is None else (loc.start, loc.half_len)) == first_by_end(naive_additive_power(w, 2, m))
    loc = find_abelian_square(w, m)
    assert (None if loc is None else (loc.start, loc.half_len)) == first_by_start(naive_abelian_squares(w, m))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-4, 4), max_size=30))
def test_abelian_implies_additive(w):
    loc = find_abelian_square(w)
    if loc is not None:
        assert is_additive_power_at(w, loc.start, loc.half_len, 2)
        assert loc.block_sums[0] == loc.block_sums[1]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=40), st.data())
def test_min_discrepancy_is_minimal(w, data):
    L = data.draw(st.integers(1, len(w) // 2))
    rep = min_discrepancy_scan(w, L)
    gaps = all_adjacent_gaps(w, L)
    assert (rep.discrepancy, rep.u.start) == min(gaps)
    assert rep.v.start == rep.u.stop and rep.u.length == rep.v.length == L
