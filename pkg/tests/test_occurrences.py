import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isaw import Text, build_occ, rank_substrings
from isaw.errors import IndexOutOfRange, InternalInvariantViolation, LayerBeyondEll, RangeOutOfBounds
from isaw.occurrences import argmin_witness, ftr_row, previous_links, suffix_minima
from isaw.oracle import gram_codes

APP = {
    1: [1, 2, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 2, 1, 1, 1, 2, 1, 2],
    2: [2, 3, 1, 2, 3, 1, 1, 2, 4, 3, 2, 4, 4, 3, 1, 1, 2, 1, 2, 3, 4],
    3: [3, 5, 2, 3, 5, 1, 2, 4, 7, 6, 4, 8, 7, 5, 1, 2, 1, 2, 3, 4, 5, 6, 7, 8],
}
PRE = {
    1: [0, 0, 1, 3, 2, 4, 6, 7, 5, 9, 8, 10, 12, 13, 11, 15, 16, 14, 17, 18],
    2: [0, 0, 0, 1, 2, 3, 6, 4, 0, 5, 8, 9, 12, 10, 7, 15, 11, 16, 17, 14, 13],
    3: [0, 0, 0, 1, 2, 0, 3, 0, 0, 0, 8, 0, 9, 5, 6, 7, 15, 16, 4, 11, 14, 10, 13, 12],
}
FTR = {
    1: [0, 1, 2, 2, 4, 5, 5, 5, 8, 8, 10, 11, 11, 11, 14, 14, 14, 17],
    2: [0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 7, 7, 7, 7, 7, 11, 11, 13],
    3: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, 4, 4],
}


@pytest.mark.parametrize("j", [1, 2, 3])
def test_reference_links(reference_text, j):
    layer = build_occ(reference_text, rank_substrings(reference_text, j))
    assert layer.app.tolist() == APP[j]
    assert layer.pre.tolist() == PRE[j]
    assert len(layer) == len(PRE[j])


@pytest.mark.parametrize("j", [1, 2, 3])
def test_reference_coverage_rows(reference_text, j):
    _, pre = previous_links(rank_substrings(reference_text, j).ranks, 2 ** j)
    values, _ = ftr_row(pre, j, reference_text.n)
    assert values.tolist() == FTR[j]


def test_coverage_minimum_argmin(reference_text):
    layer = build_occ(reference_text, rank_substrings(reference_text, 2))
    # minimum of PRE_2[11..21] is PRE_2[15] = 7, the last link of "aa"
    assert layer.ftr_value(11) == (7, 15)
    assert layer.ftr_value(10) == (5, 10)
    assert layer.ftr_value(9) == (0, 9)
    assert layer.covers_all(7, 11)
    assert not layer.covers_all(8, 11)


def test_witness_from_zero_minimum(reference_text):
    layer = build_occ(reference_text, rank_substrings(reference_text, 2))
    value, k = layer.ftr_value(9)
    ans = layer.witness_from_argmin(value, k)
    assert ans.word(reference_text) == (2, 2)  # "bb" = T[9..10]


def test_argmin_witness_rejects_appended_zero():
    with pytest.raises(InternalInvariantViolation):
        argmin_witness(2, 10, 0, 10)


def test_suffix_minima_leftmost():
    values, argmins = suffix_minima(np.array([3, 1, 2, 1, 5]))
    assert values.tolist() == [1, 1, 1, 1, 5]
    assert argmins.tolist() == [1, 1, 3, 3, 4]


def test_errors(reference_text):
    with pytest.raises(LayerBeyondEll):
        build_occ(reference_text, rank_substrings(reference_text, 4))
    layer = build_occ(reference_text, rank_substrings(reference_text, 1))
    with pytest.raises(RangeOutOfBounds):
        layer.covers_all(3, 2)
    with pytest.raises(IndexOutOfRange):
        layer.ftr_value(19)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda s: st.tuples(st.just(s), st.lists(st.integers(1, s), min_size=2, max_size=50))))
def test_covers_all_matches_brute_force(case):
    sigma, seq = case
    t = Text.from_codes(seq, sigma)
    for j in range(1, t.ell):
        layer = build_occ(t, rank_substrings(t, j))
        for a in range(1, t.n + 1):
            for b in range(a, t.n + 1):
                assert layer.covers_all(a, b) == (len(gram_codes(seq[a - 1:b], j, sigma)) == sigma ** j)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=2, max_size=60))
def test_coverage_row_is_rightmost_start(seq):
    t = Text.from_codes(seq, 2)
    for j in range(1, t.ell):
        _, pre = previous_links(rank_substrings(t, j).ranks, 2 ** j)
        values, _ = ftr_row(pre, j, t.n)
        for i in range(1, t.n + 1):
            starts = [s for s in range(1, i + 1) if len(gram_codes(seq[s - 1:i], j, 2)) == 2 ** j]
            assert values[i - 1] == (max(starts) if starts else 0)
