import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isaw import Text, build_fragments, build_occ, rank_substrings
from isaw.errors import RangeOutOfBounds
from isaw.fragments import fragment_endpoints
from isaw.oracle import gram_codes


def layers(text, j):
    occ = build_occ(text, rank_substrings(text, j))
    return occ, build_fragments(occ)


def test_reference_fragment_vectors(reference_text):
    _, frag = layers(reference_text, 2)
    assert frag.sp.positions().tolist() == [5, 7, 11, 13]
    assert frag.ep.positions().tolist() == [10, 11, 16, 18]
    assert frag.fragments() == [(5, 10), (7, 11), (11, 16), (13, 18)]
    assert frag.count == 4


def test_reference_coverage_test(reference_text):
    _, frag = layers(reference_text, 2)
    assert frag.has_all_order_j(5, 14)
    assert not frag.has_all_order_j(2, 7)
    with pytest.raises(RangeOutOfBounds):
        frag.has_all_order_j(0, 4)


def test_reference_fragment_witness(reference_text):
    occ, frag = layers(reference_text, 2)
    # suffix of the leftmost minimal fragment T[5..10] starting after a = 2
    ans = frag.witness_order_j(occ, 2, 7)
    assert ans.word(reference_text) == (2, 2)
    assert (ans.witness.i, ans.witness.j) == (9, 10)


def test_fallback_witness_when_no_fragment_follows(reference_text):
    occ, frag = layers(reference_text, 2)
    ans = frag.witness_order_j(occ, 14, 18)
    word = ans.word(reference_text)
    assert word not in {tuple(reference_text.tokens[i:i + 2].tolist()) for i in range(13, 17)}


def brute_minimal_fragments(seq, j, sigma):
    full = sigma ** j

    def covers(s, e):
        return len(gram_codes(seq[s - 1:e], j, sigma)) == full

    n = len(seq)
    return [
        (s, e) for s in range(1, n + 1) for e in range(s, n + 1)
        if covers(s, e) and not covers(s + 1, e) and not covers(s, e - 1)
    ]


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 3).flatmap(lambda s: st.tuples(st.just(s), st.lists(st.integers(1, s), min_size=2, max_size=45))))
def test_fragments_match_brute_force(case):
    sigma, seq = case
    t = Text.from_codes(seq, sigma)
    for j in range(1, t.ell):
        occ, frag = layers(t, j)
        assert frag.fragments() == brute_minimal_fragments(seq, j, sigma)
        for a in range(1, t.n + 1):
            for b in range(a, t.n + 1):
                full = len(gram_codes(seq[a - 1:b], j, sigma)) == sigma ** j
                assert frag.has_all_order_j(a, b) == full
                if not full:
                    word = frag.witness_order_j(occ, a, b).word(t)
                    assert len(word) == j
                    assert all(tuple(seq[i:i + j]) != word for i in range(a - 1, b - j + 1))


def test_endpoints_direct(reference_text):
    occ = build_occ(reference_text, rank_substrings(reference_text, 1))
    starts, ends = fragment_endpoints(occ.pre, 1, reference_text.n)
    assert list(zip(starts.tolist(), ends.tolist())) == [(1, 2), (2, 3), (4, 5), (5, 6), (8, 9), (10, 11), (11, 12), (14, 15), (17, 18)]
