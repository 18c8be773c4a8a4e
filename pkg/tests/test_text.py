import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isaw import Extension, SawAnswer, Substring, Text, build_text, global_saw, rank_substrings, substring_complexity
from isaw.errors import EmptyInput, LengthOutOfRange, SigmaTooSmall, UnaryAlphabet
from isaw.oracle import gram_codes, shortest_absent
from isaw.text import iter_rank_arrays

from conftest import letters

RNK = {
    1: [1, 2, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 2, 1, 1, 1, 2],
    2: [2, 3, 1, 2, 3, 1, 1, 2, 4, 3, 2, 4, 4, 3, 1, 1, 2],
    3: [3, 5, 2, 3, 5, 1, 2, 4, 7, 6, 4, 8, 7, 5, 1, 2],
}


@pytest.mark.parametrize("j", [1, 2, 3])
def test_reference_ranks(reference_text, j):
    assert rank_substrings(reference_text, j).ranks.tolist() == RNK[j]


def test_build_text_kinds():
    assert build_text("ba").tokens.tolist() == [2, 1]
    assert build_text(b"ba").alphabet == (97, 98)
    assert build_text([30, 10, 30]).tokens.tolist() == [2, 1, 2]
    assert build_text(np.array([5, 7])).sigma == 2
    t = build_text(["x", "yy", "x"])
    assert t.alphabet == ("x", "yy") and t.tokens.tolist() == [1, 2, 1]


def test_build_text_errors():
    with pytest.raises(EmptyInput):
        build_text("")
    with pytest.raises(UnaryAlphabet):
        build_text("aaa")
    with pytest.raises(UnaryAlphabet):
        build_text("ab", sigma=1)
    with pytest.raises(SigmaTooSmall):
        build_text("abc", sigma=2)
    with pytest.raises(SigmaTooSmall):
        Text.from_codes([1, 3], 2)


def test_decode_phantom_letter():
    t = build_text("aaaa", sigma=3)
    assert t.decode(1) == "a"
    assert t.decode(3) == "#3"
    with pytest.raises(KeyError):
        t.decode(4)
    assert t.encode("a") == 1


def test_suffix_array(reference_text):
    s = "abaabaaabbabbbaaab"
    expected = sorted(range(1, len(s) + 1), key=lambda i: s[i - 1:])
    assert reference_text.suffix_array.tolist() == expected


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=40))
def test_suffix_array_and_complexity(seq):
    t = Text.from_codes(seq, 3)
    assert t.suffix_array.tolist() == sorted(range(1, len(seq) + 1), key=lambda i: seq[i - 1:])
    for j in range(1, len(seq) + 1):
        assert substring_complexity(t, j) == len(gram_codes(seq, j, 3))


def test_substring_complexity_range(reference_text):
    assert substring_complexity(reference_text, 3) == 8
    assert substring_complexity(reference_text, 4) == 12
    with pytest.raises(LengthOutOfRange):
        substring_complexity(reference_text, 19)
    with pytest.raises(LengthOutOfRange):
        rank_substrings(reference_text, 0)


def test_rank_arrays_big_alphabet_power():
    # sigma^j overflows int64 here, ranks must stay exact
    t = Text.from_codes([1, 9, 9, 1] * 20, 9)
    ra = list(iter_rank_arrays(t, 21))[-1]
    assert ra.j == 21
    assert ra.ranks[0] == sum((d - 1) * 9 ** (20 - k) for k, d in enumerate(t.tokens[:21].tolist())) + 1


def test_global_saw_reference(reference_text):
    ans = reference_text.saw
    assert ans.length == 4 == reference_text.ell
    assert letters(reference_text, ans.word(reference_text)) in {"aaaa", "abab", "baba", "bbbb"}


def test_global_saw_missing_letter():
    t = build_text("aaaa", sigma=2)
    assert global_saw(t) == SawAnswer(1, Extension(0, 0, 2))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 4).flatmap(lambda s: st.tuples(st.just(s), st.lists(st.integers(1, s), min_size=1, max_size=60))))
def test_global_saw_matches_oracle(case):
    sigma, seq = case
    t = Text.from_codes(seq, sigma)
    ans = global_saw(t)
    res = shortest_absent(seq, sigma)
    assert ans.length == res.length
    assert ans.word(t) == res.absent_word


def test_witness_words(reference_text):
    assert Substring(7, 8).word(reference_text.tokens) == (1, 1)
    assert Extension(0, 0, 2).word(reference_text.tokens) == (2,)
    assert Extension(1, 2, 2).word(reference_text.tokens) == (1, 2, 2)
    with pytest.raises(AssertionError):
        SawAnswer(3, Substring(1, 2)).word(reference_text)
