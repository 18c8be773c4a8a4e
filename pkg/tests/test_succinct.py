import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isaw import BitVector, PackedArray, Rmq
from isaw.errors import IndexOutOfRange, NotFound
from isaw.succinct import BitVectorStack

bits_strategy = st.lists(st.integers(0, 1), min_size=0, max_size=1500)


def check_bitvector(bits):
    bv = BitVector.from_bits(bits)
    assert bv.to_array().tolist() == list(bits)
    prefix = np.concatenate([[0], np.cumsum(bits)]) if bits else np.array([0])
    for i in range(len(bits) + 1):
        assert bv.rank1(i) == prefix[i]
        assert bv.rank(0, i) == i - prefix[i]
    ones = [i + 1 for i, b in enumerate(bits) if b]
    zeros = [i + 1 for i, b in enumerate(bits) if not b]
    assert [bv.select1(k) for k in range(1, len(ones) + 1)] == ones
    assert [bv.select0(k) for k in range(1, len(zeros) + 1)] == zeros
    assert bv.positions().tolist() == ones


@settings(max_examples=60, deadline=None)
@given(bits_strategy)
def test_rank_select_random(bits):
    check_bitvector(bits)


@pytest.mark.parametrize("density", [0.002, 0.5, 0.995])
def test_rank_select_long(density):
    rng = np.random.default_rng(int(density * 1000))
    check_bitvector((rng.random(5000) < density).astype(int).tolist())


def test_bitvector_examples():
    bv = BitVector.from_bits("0110")
    assert (bv.rank1(2), bv.select1(2), bv.select0(2), bv[1], bv[2]) == (1, 3, 4, 0, 1)
    assert bv.to_string() == "0110"
    assert bv == BitVector.from_positions([2, 3], 4)
    assert len(bv) == 4 and bv.select(0, 1) == 1 and bv.select(1, 1) == 2


def test_bitvector_errors():
    bv = BitVector.from_bits("0110")
    with pytest.raises(NotFound):
        bv.select1(3)
    with pytest.raises(NotFound):
        bv.select0(3)
    with pytest.raises(IndexOutOfRange):
        bv.rank1(5)
    with pytest.raises(IndexOutOfRange):
        bv[0]
    with pytest.raises(ValueError):
        BitVector(np.array([1 << 5], dtype=np.uint64), 4)


def test_bitvector_stack_matches_members():
    rng = np.random.default_rng(2)
    vectors = [BitVector.from_bits(rng.integers(0, 2, n)) for n in (10, 700, 64, 1)]
    before = [v.positions().tolist() for v in vectors]
    stack = BitVectorStack(vectors)
    for layer, (v, ones) in enumerate(zip(vectors, before)):
        assert v.positions().tolist() == ones
        for k, pos in enumerate(ones, start=1):
            assert stack.select1(layer, k) == pos == v.select1(k)
        with pytest.raises(NotFound):
            stack.select1(layer, len(ones) + 1)


def test_bitvector_stack_column_search():
    # values select1(i) - i per vector: vector j holds v_i = 3 - j for all i (non-increasing in j)
    vectors = [BitVector.from_positions(np.arange(1, 6) + (3 - j), 5 + 3 - j) for j in range(1, 4)]
    stack = BitVectorStack(vectors)
    assert stack.first_below(4, 1, 3, 2) == 2
    assert stack.first_below(4, 1, 3, 1) == 3
    assert stack.first_below(4, 1, 3, 0) == 4


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2 ** 40), min_size=0, max_size=300), st.integers(0, 24))
def test_packed_array(values, extra):
    width = max(1, max(values, default=0).bit_length()) + extra
    width = min(width, 64)
    arr = PackedArray.from_values(values, width)
    assert [arr[k] for k in range(len(values))] == values
    assert arr.to_array().tolist() == values


def test_packed_array_errors():
    with pytest.raises(ValueError):
        PackedArray.from_values([8], 3)
    with pytest.raises(IndexOutOfRange):
        PackedArray.from_values([1, 2])[2]
    assert PackedArray.from_values([1, 2, 3]).width == 2


def brute_argmin(values, l, r):
    return l + int(np.argmin(values[l - 1:r]))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=200))
def test_rmq_all_pairs(values):
    values = np.array(values)
    rmq = Rmq(values)
    for l in range(1, values.size + 1):
        for r in range(l, min(values.size, l + 40) + 1):
            assert rmq.argmin(l, r) == brute_argmin(values, l, r)


@pytest.mark.parametrize("m", [511, 4096, 70000])
def test_rmq_long(m):
    rng = np.random.default_rng(m)
    values = rng.integers(0, m // 4 + 2, m)
    rmq = Rmq(values)
    for _ in range(2000):
        l, r = sorted(int(x) for x in rng.integers(1, m + 1, 2))
        assert rmq.argmin(l, r) == brute_argmin(values, l, r)


def test_rmq_monotone_inputs():
    for values in (np.arange(3000), np.arange(3000)[::-1].copy(), np.zeros(3000, dtype=int)):
        rmq = Rmq(values)
        for l, r in ((1, 3000), (17, 2900), (1000, 1000), (5, 6)):
            assert rmq.argmin(l, r) == brute_argmin(values, l, r)


def test_rmq_from_parentheses():
    values = np.array([3, 1, 4, 1, 5, 9, 2, 6])
    rmq = Rmq(values)
    again = Rmq(bp=rmq.bp)
    assert len(again) == 8
    assert all(again.argmin(l, r) == brute_argmin(values, l, r) for l in range(1, 9) for r in range(l, 9))
    assert rmq.min_excess(1, rmq.bp.length)[0] == 0


def test_rmq_errors():
    rmq = Rmq([2, 1])
    with pytest.raises(IndexOutOfRange):
        rmq.argmin(0, 1)
    with pytest.raises(IndexOutOfRange):
        rmq.argmin(2, 1)
    with pytest.raises(ValueError):
        Rmq([])


def test_rmq_space_is_linear_in_bits():
    m = 1 << 16
    rmq = Rmq(np.random.default_rng(0).integers(0, 100, m))
    assert rmq.nbytes * 8 / m < 8
