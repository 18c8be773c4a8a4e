"""Static bit vectors with rank/select and range-minimum queries that do not keep the array.

Directory layout of :class:`BitVector` (all counts are of 1-bits):

* ``_super``: one uint64 per superblock of 512 bits, ones before it;
* ``_sub``: one uint16 per 64-bit word, ones from its superblock start;
* ``_samples[q]``: word index holding every 64th q-bit, for select, plus
  a sentinel for the last word.

rank is two table reads plus a popcount. select jumps to the sampled word,
binary-searches the words up to the next sample and finishes inside one
word, so its cost is bounded by ``log2`` of the sample gap rather than O(1).
The hot paths (select_1 and the RMQ) run as compiled kernels.
"""
from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import IndexOutOfRange, NotFound

WORD = 64
WORDS_PER_SUPER = 8
SAMPLE_RATE = 64

# _BYTE_SELECT[b][k] = offset of the (k+1)-th set bit of byte b
_BYTE_SELECT = [[p for p in range(8) if b >> p & 1] for b in range(256)]


def _select_in_word(x: int, k: int) -> int:
    """0-based offset of the k-th (1-based) set bit of a 64-bit word."""
    off = 0
    for width in (32, 16, 8):
        low = x & ((1 << width) - 1)
        c = low.bit_count()
        if k > c:
            k -= c
            x >>= width
            off += width
        else:
            x = low
    return off + _BYTE_SELECT[x & 0xFF][k - 1]


def _pack(bits: np.ndarray) -> np.ndarray:
    bits = np.asarray(bits, dtype=np.uint8)
    nwords = (bits.size + WORD - 1) // WORD
    packed = np.packbits(bits, bitorder="little")
    buf = np.zeros(nwords * 8, dtype=np.uint8)
    buf[:packed.size] = packed
    return buf.view(np.uint64)


class BitVector:
    """Immutable bit sequence ``H[1..m]`` with rank and select."""

    def __init__(self, words: np.ndarray, length: int):
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.size != (length + WORD - 1) // WORD:
            raise ValueError(f"{words.size} words cannot hold exactly {length} bits")
        if length % WORD and int(words[-1]) >> (length % WORD):
            raise ValueError("bits set beyond the declared length")
        self.words = words
        self.length = int(length)
        self._build_directories()

    @classmethod
    def from_bits(cls, bits) -> "BitVector":
        """From a sequence of 0/1 values or a string like ``"0110"``."""
        if isinstance(bits, str):
            bits = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
        bits = np.asarray(bits, dtype=np.uint8)
        return cls(_pack(bits), bits.size)

    @classmethod
    def from_positions(cls, positions, length: int) -> "BitVector":
        """Set bits at the given 1-based positions."""
        bits = np.zeros(length, dtype=np.uint8)
        bits[np.asarray(positions, dtype=np.int64) - 1] = 1
        return cls(_pack(bits), length)

    def _build_directories(self) -> None:
        nwords = self.words.size
        counts = np.bitwise_count(self.words).astype(np.int64)
        cum = np.zeros(nwords + 1, dtype=np.int64)
        np.cumsum(counts, out=cum[1:])
        super_ = cum[::WORDS_PER_SUPER].astype(np.uint64)
        sub = (cum - cum[(np.arange(nwords + 1) // WORDS_PER_SUPER) * WORDS_PER_SUPER]).astype(np.uint16)
        self.ones = int(cum[-1])
        self.zeros = self.length - self.ones
        self._super = super_
        self._sub = sub
        cum0 = np.arange(nwords + 1, dtype=np.int64) * WORD - cum
        dtype = np.uint32 if nwords < (1 << 32) else np.int64
        last = max(nwords - 1, 0)
        self._samples = tuple(
            np.append(np.searchsorted(c, np.arange(1, total + 1, SAMPLE_RATE), side="left") - 1, last).astype(dtype)
            for c, total in ((cum0, self.zeros), (cum, self.ones))
        )
        self._make_views()

    def _make_views(self) -> None:
        # memoryviews index to plain Python ints much faster than ndarrays
        self._w = memoryview(self.words)
        self._sup = memoryview(self._super)
        self._sb = memoryview(self._sub)
        self._smv = (memoryview(self._samples[0]), memoryview(self._samples[1]))

    def _rebind(self, words, sup, sub, samples1) -> None:
        """Swap in equal-content arrays (views into shared storage)."""
        self.words, self._super, self._sub = words, sup, sub
        self._samples = (self._samples[0], samples1)
        self._make_views()

    _select1 = staticmethod(_kernels.bv_select1)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexOutOfRange(f"bit {i} outside [1, {self.length}]")
        return (self._w[(i - 1) >> 6] >> ((i - 1) & 63)) & 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and np.array_equal(self.words, other.words)
        )

    def __repr__(self) -> str:
        return f"BitVector(length={self.length}, ones={self.ones})"

    def to_array(self) -> np.ndarray:
        return np.unpackbits(self.words.view(np.uint8), bitorder="little")[:self.length]

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.to_array())

    def positions(self) -> np.ndarray:
        """1-based positions of all set bits."""
        return np.flatnonzero(self.to_array()) + 1

    @property
    def nbytes(self) -> int:
        return int(
            self.words.nbytes + self._super.nbytes + self._sub.nbytes
            + self._samples[0].nbytes + self._samples[1].nbytes
        )

    def _ones_before_word(self, w: int) -> int:
        return self._sup[w >> 3] + self._sb[w]

    def rank1(self, i: int) -> int:
        """Number of 1-bits in ``H[1..i]``."""
        if not 0 <= i <= self.length:
            raise IndexOutOfRange(f"rank argument {i} outside [0, {self.length}]")
        w = i >> 6
        r = self._sup[w >> 3] + self._sb[w]
        rem = i & 63
        if rem:
            r += (self._w[w] & ((1 << rem) - 1)).bit_count()
        return r

    def rank(self, q: int, i: int) -> int:
        r1 = self.rank1(i)
        return r1 if q else i - r1

    def select1(self, k: int) -> int:
        """Position of the k-th 1-bit."""
        if not 1 <= k <= self.ones:
            raise NotFound(f"select_1({k}) with only {self.ones} ones")
        return self._select1(self.words, self._super, self._sub, self._samples[1], k)

    def select0(self, k: int) -> int:
        """Position of the k-th 0-bit."""
        if not 1 <= k <= self.zeros:
            raise NotFound(f"select_0({k}) with only {self.zeros} zeros")
        samples = self._smv[0]
        s = (k - 1) >> 6
        lo = samples[s]
        hi = samples[s + 1]
        sup, sb = self._sup, self._sb
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if (mid << 6) - sup[mid >> 3] - sb[mid] < k:
                lo = mid
            else:
                hi = mid - 1
        before = (lo << 6) - sup[lo >> 3] - sb[lo]
        return (lo << 6) + _select_in_word(~self._w[lo] & 0xFFFFFFFFFFFFFFFF, k - before) + 1

    def select(self, q: int, k: int) -> int:
        return self.select1(k) if q else self.select0(k)


class Rmq:
    """Leftmost-argmin range minimum queries over an integer array that is not retained.

    The array is encoded as the balanced-parentheses sequence of its
    previous-smaller-or-equal tree (node i's parent is the nearest ``k < i``
    with ``A[k] <= A[i]``). For ``l < r`` the answer is ``l`` when ``l`` is an
    ancestor of ``r``; otherwise it is the child of their lowest common
    ancestor on the path to ``r``. Both cases fall out of the rightmost
    minimum of the excess sequence between the opening parentheses of
    ``l`` and ``r``. Excess minima are indexed per 64-bit word, per
    512-bit superblock and by a sparse table over superblocks.
    """

    verify_limit = 16

    def __init__(self, values=None, *, bp: BitVector | None = None):
        if bp is None:
            values = np.ascontiguousarray(values, dtype=np.int64)
            if values.size == 0:
                raise ValueError("cannot build an RMQ over an empty array")
            bits = _kernels.cartesian_bp(values)
            bp = BitVector(_pack(bits), bits.size)
        else:
            bits = bp.to_array()
        self.bp = bp
        self.length = bp.length // 2 - 1
        self._build_excess(bits)
        if values is not None and values.size <= self.verify_limit:
            self._verify(values)

    def _build_excess(self, bits: np.ndarray) -> None:
        L = bits.size
        nwords = (L + WORD - 1) // WORD
        excess = np.cumsum(bits.astype(np.int32) * 2 - 1, dtype=np.int32)
        big = np.int32(1 << 30)
        padded = np.full(nwords * WORD, big, dtype=np.int32)
        padded[:L] = excess
        rows = padded.reshape(nwords, WORD)
        start = np.zeros(nwords, dtype=np.int32)
        start[1:] = excess[WORD - 1:L - 1:WORD][: nwords - 1]
        rev_arg = WORD - 1 - np.argmin(rows[:, ::-1], axis=1)
        self._wmin = (rows.min(axis=1) - start).astype(np.int8)
        self._wpos = rev_arg.astype(np.uint8)  # 0-based offset inside the word

        nsuper = (nwords + WORDS_PER_SUPER - 1) // WORDS_PER_SUPER
        spad = np.full(nsuper * WORDS_PER_SUPER * WORD, big, dtype=np.int32)
        spad[:padded.size] = padded
        srows = spad.reshape(nsuper, WORDS_PER_SUPER * WORD)
        width = WORDS_PER_SUPER * WORD
        self._smin = srows.min(axis=1).astype(np.int32)
        self._spos = (
            np.arange(nsuper, dtype=np.int64) * width + (width - 1 - np.argmin(srows[:, ::-1], axis=1))
        ).astype(np.uint32 if L < (1 << 32) else np.uint64)

        # row k holds the rightmost-minimum superblock of [s, s + 2^k); rows are zero-padded
        nlevels = max(1, nsuper.bit_length())
        sparse = np.zeros((nlevels, nsuper), dtype=np.int32)
        sparse[0] = np.arange(nsuper, dtype=np.int32)
        for k in range(1, nlevels):
            half = 1 << (k - 1)
            size = nsuper - (1 << k) + 1
            a = sparse[k - 1, :size]
            b = sparse[k - 1, half: half + size]
            sparse[k, :size] = np.where(self._smin[b] <= self._smin[a], b, a)
        self._sparse = sparse
        bp = self.bp
        self._arrays = (bp.words, bp._super, bp._sub, bp._samples[1], self._wmin, self._wpos,
                        self._smin, self._spos, sparse)

    def _verify(self, values: np.ndarray) -> None:
        m = values.size
        for l in range(1, m + 1):
            best = l
            for r in range(l, m + 1):
                if values[r - 1] < values[best - 1]:
                    best = r
                got = self.argmin(l, r)
                if got != best:
                    raise AssertionError(f"RMQ({l},{r}) = {got}, expected {best}")

    @property
    def nbytes(self) -> int:
        return int(
            self.bp.nbytes + self._wmin.nbytes + self._wpos.nbytes + self._smin.nbytes
            + self._spos.nbytes + self._sparse.nbytes
        )

    def __len__(self) -> int:
        return self.length

    def min_excess(self, x: int, y: int) -> tuple[int, int]:
        """(minimum excess, rightmost position attaining it) over BP positions x..y."""
        if not 1 <= x <= y <= self.bp.length:
            raise IndexOutOfRange(f"excess range [{x}, {y}] outside [1, {self.bp.length}]")
        words, sup, sub, _, wmin, wpos, smin, spos, sparse = self._arrays
        best, at = _kernels.rmq_min_excess(words, sup, sub, wmin, wpos, smin, spos, sparse, x, y)
        return int(best), int(at)

    def argmin(self, l: int, r: int) -> int:
        """Leftmost position of a minimum of ``A[l..r]``."""
        if not 1 <= l <= r <= self.length:
            raise IndexOutOfRange(f"RMQ range [{l}, {r}] outside [1, {self.length}]")
        return _kernels.rmq_argmin(*self._arrays, l, r)


class BitVectorStack:
    """Several bit vectors laid end to end so one compiled call can probe any of them.

    The member vectors are rebound to views of the shared arrays, so the
    stack costs only its offset table.
    """

    def __init__(self, vectors: list[BitVector]):
        self.vectors = vectors
        parts = [(bv.words, bv._super, bv._sub, bv._samples[1]) for bv in vectors]
        sizes = np.array([[p.size for p in part] for part in parts], dtype=np.int64).reshape(len(vectors), 4)
        # columns 0-3: slice starts of each array; column 4: number of ones
        offs = np.zeros((len(vectors) + 1, 5), dtype=np.int64)
        np.cumsum(sizes, axis=0, out=offs[1:, :4])
        offs[:-1, 4] = [bv.ones for bv in vectors]
        self.offs = offs
        self.arrays = tuple(
            np.concatenate([part[c] for part in parts]) if parts else np.zeros(0, dtype=np.uint64)
            for c in range(4)
        )
        for k, bv in enumerate(vectors):
            words, sup, sub, samples = (arr[offs[k, c]:offs[k + 1, c]] for c, arr in enumerate(self.arrays))
            bv._rebind(words, sup, sub, samples)

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def nbytes(self) -> int:
        return int(self.offs.nbytes)

    def select1(self, layer: int, k: int) -> int:
        """select_1(k) on vector ``layer`` (0-based)."""
        bv = self.vectors[layer]
        if not 1 <= k <= bv.ones:
            raise NotFound(f"select_1({k}) with only {bv.ones} ones")
        return _kernels.stack_select1(*self.arrays, self.offs, layer, k)

    def first_below(self, i: int, lo: int, hi: int, a: int) -> int:
        """Smallest 1-based ``j`` in ``[lo, hi]`` with ``select_1(i) - i < a`` on vector ``j - 1``; ``hi + 1`` if none."""
        return _kernels.column_first_below(*self.arrays, self.offs, i, lo, hi, a)


class PackedArray:
    """Fixed-width unsigned integers packed into 64-bit words (entry k at bits ``k*width ..``)."""

    def __init__(self, words: np.ndarray, width: int, size: int):
        if not 1 <= width <= 64:
            raise ValueError(f"width {width} outside [1, 64]")
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.size != (size * width + WORD - 1) // WORD:
            raise ValueError(f"{words.size} words do not hold {size} entries of {width} bits")
        self.words = words
        self.width = int(width)
        self.size = int(size)
        self._mask = (1 << width) - 1
        self._w = memoryview(words)

    @classmethod
    def from_values(cls, values, width: int | None = None) -> "PackedArray":
        values = np.ascontiguousarray(values, dtype=np.uint64).reshape(-1)
        top = int(values.max()) if values.size else 0
        if width is None:
            width = max(1, top.bit_length())
        elif top >> width:
            raise ValueError(f"value {top} does not fit in {width} bits")
        return cls(_kernels.pack_fixed(values, width), width, values.size)

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, k: int) -> int:
        """Entry k (0-based)."""
        if not 0 <= k < self.size:
            raise IndexOutOfRange(f"entry {k} outside [0, {self.size})")
        bit = k * self.width
        w, off = bit >> 6, bit & 63
        x = self._w[w] >> off
        if off + self.width > WORD:
            x |= self._w[w + 1] << (WORD - off)
        return x & self._mask

    def to_array(self) -> np.ndarray:
        return _kernels.unpack_fixed(self.words, self.width, self.size)

    @property
    def nbytes(self) -> int:
        return int(self.words.nbytes)
