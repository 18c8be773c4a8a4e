"""Linear-space index: coverage starts decoded on demand from unary bit vectors.

Per word length j the index keeps three bit-level structures and nothing
else: ``bj`` (coverage starts, non-decreasing in the position, as unary
gaps), an RMQ over the previous-occurrence links (the links themselves are
dropped after the build) and the minimal-fragment vectors.

A query first searches the column at ``b`` down to ``t`` lengths. Failing
that, it searches the full column at the next checkpoint ``b'`` (a multiple
of ``c``, or ``n``) and then only has to look at lengths in
``[m - 18, m]`` below the checkpoint answer ``m``: appending fewer than
``c`` letters can raise the answer by at most 18.
"""
from __future__ import annotations

import math

import numpy as np

from ._base import IndexBase
from .errors import IndexOutOfRange, InternalInvariantViolation
from .fragments import FragmentLayer, fragment_endpoints
from .occurrences import argmin_witness, ftr_row, previous_links
from . import _kernels
from .predecessor import first_below, first_true
from .succinct import BitVector, BitVectorStack, Rmq
from .text import SawAnswer, Substring, Text, iter_rank_arrays

WINDOW = 18


class MonotoneMinima:
    """Non-decreasing ``v_1..v_n`` stored as the bit vector with its i-th 1 at ``i + v_i``."""

    def __init__(self, j: int, bj: BitVector):
        self.j = j
        self.bj = bj
        self.n = bj.ones

    @classmethod
    def encode(cls, j: int, values: np.ndarray) -> "MonotoneMinima":
        values = np.asarray(values, dtype=np.int64)
        n = values.size
        if n and np.any(np.diff(values) < 0):
            raise ValueError("sequence must be non-decreasing")
        length = n + (int(values[-1]) if n else 0)
        return cls(j, BitVector.from_positions(np.arange(1, n + 1) + values, length))

    def __getitem__(self, i: int) -> int:
        return self.bj.select1(i) - i

    def decode(self) -> np.ndarray:
        return self.bj.positions() - np.arange(1, self.n + 1)


class LinearLayer:
    """Everything the linear index keeps for one word length."""

    def __init__(self, j: int, n: int, minima: MonotoneMinima, rmq: Rmq, frag: FragmentLayer):
        self.j = j
        self.n = n
        self.minima = minima
        self.rmq = rmq
        self.frag = frag
        self.pre_len = rmq.length
        self._select = minima.bj.select1

    @property
    def nbytes(self) -> int:
        return self.minima.bj.nbytes + self.rmq.nbytes + self.frag.nbytes

    def ftr_access(self, i: int) -> int:
        return self._select(i) - i

    def ftr_value(self, i: int) -> tuple[int, int]:
        return self.ftr_access(i), self.rmq.argmin(max(1, i - self.j + 2), self.pre_len)

    def answer_at(self, b: int) -> SawAnswer:
        """Length-j witness for a window ending at b known to miss a length-j word."""
        return self.answer_from_value(b, self.ftr_access(b))

    def answer_from_value(self, b: int, value: int) -> SawAnswer:
        k = self.rmq.argmin(max(1, b - self.j + 2), self.pre_len) if value == 0 else 0
        return argmin_witness(self.j, self.n, value, k)


def checkpoint_period(n: int) -> int:
    log_n = n.bit_length() - 1  # floor(log2 n)
    return max(2, log_n.bit_length() - 1) if log_n >= 1 else 2


def truncation_depth(n: int, lam: int) -> int:
    if n < 4:
        return lam - 1
    ll = math.log2(math.log2(n))
    return min(lam - 1, max(1, math.ceil(math.log2(n) / ll)))


class LinearIndex(IndexBase):
    mode = "linear"

    def __init__(self, text: Text, lam: int, global_answer: SawAnswer, layers: list[LinearLayer]):
        super().__init__(text, lam, global_answer)
        if len(layers) != lam - 1:
            raise ValueError(f"expected {lam - 1} layers, got {len(layers)}")
        self.layers = layers
        self._restack()
        self.c = checkpoint_period(self.n)
        self.t = truncation_depth(self.n, lam)
        self.window_log: list[tuple[int, int]] | None = None

    def _restack(self) -> None:
        # one shared layout lets a single compiled call run the whole search
        layers = self.layers
        self._stack = BitVectorStack(
            [layer.minima.bj for layer in layers]
            + [layer.frag.sp for layer in layers]
            + [layer.frag.ep for layer in layers]
        )
        self._stack_args = (*self._stack.arrays, self._stack.offs)

    @property
    def nbytes(self) -> int:
        return sum(layer.nbytes for layer in self.layers) + self._stack.nbytes

    def checkpoint(self, b: int) -> int:
        c = self.c
        return min(self.n, -(-b // c) * c)

    def ftr_access(self, j: int, i: int) -> int:
        if not 1 <= j <= self.lam - 1 or not 1 <= i <= self.n:
            raise IndexOutOfRange(f"(j={j}, i={i}) outside [1, {self.lam - 1}] x [1, {self.n}]")
        return self.layers[j - 1].ftr_access(i)

    def _covers(self, j: int, a: int, b: int) -> bool:
        return self.layers[j - 1].frag.has_all_order_j(a, b)

    def _fragment_answer(self, j: int, a: int, b: int) -> SawAnswer:
        layer = self.layers[j - 1]
        return layer.frag.witness_order_j(layer, a, b)

    def query(self, a: int, b: int, debug: bool = False) -> SawAnswer:
        self._check_range(a, b)
        if a == b:
            return self._single_letter(a)
        w = self.lam - 1
        if w == 0:
            return self.global_answer
        kind, j, x = _kernels.linear_query(
            *self._stack_args, w, self.t, WINDOW, a, b, self.checkpoint(b)
        )
        if debug and j > self.t:  # answers of length <= t never reach the checkpoint
            self._check_window(a, b, self._checkpoint_answer(a, b))
        if kind == 0:
            return self.layers[j - 1].answer_from_value(b, x)
        if kind == 1:
            if x:
                return SawAnswer(j, Substring(x - j + 1, x))
            value, k = self.layers[j - 1].ftr_value(b)
            return argmin_witness(j, self.n, value, k)
        return self.global_answer

    def _checkpoint_answer(self, a: int, b: int) -> int:
        b2 = self.checkpoint(b)
        return first_below(lambda j: self.layers[j - 1].ftr_access(b2), self.t + 1, self.lam - 1, a)

    def _check_window(self, a: int, b: int, m: int) -> None:
        true_len = first_true(lambda j: not self._covers(j, a, b), 1, self.lam - 1)
        if not m - WINDOW <= true_len <= m:
            raise InternalInvariantViolation(
                f"answer {true_len} for [{a}, {b}] outside [{m - WINDOW}, {m}] (checkpoint {self.checkpoint(b)})"
            )
        if self.window_log is not None:
            self.window_log.append((m, true_len))

    def query_loglog(self, a: int, b: int) -> SawAnswer:
        """Binary search over lengths using only the fragment vectors."""
        self._check_range(a, b)
        if a == b:
            return self._single_letter(a)
        w = self.lam - 1
        j = first_true(lambda j: not self._covers(j, a, b), 1, w)
        if j <= w:
            return self._fragment_answer(j, a, b)
        return self.global_answer

    def flip_bj_bit(self, j: int, position: int) -> None:
        """Corrupt one bit of the length-j unary vector (fault injection for verification)."""
        layer = self.layers[j - 1]
        bits = layer.minima.bj.to_array().copy()
        bits[position - 1] ^= 1
        minima = MonotoneMinima(j, BitVector.from_bits(bits))
        self.layers[j - 1] = LinearLayer(j, self.n, minima, layer.rmq, layer.frag)
        self._restack()


def build_layer(j: int, n: int, ranks: np.ndarray, sigma_j: int) -> LinearLayer:
    _, pre = previous_links(ranks, sigma_j)
    values, _ = ftr_row(pre, j, n)
    minima = MonotoneMinima.encode(j, values)
    starts, ends = fragment_endpoints(pre, j, n)
    frag = FragmentLayer.from_endpoints(j, n, starts, ends)
    return LinearLayer(j, n, minima, Rmq(pre), frag)


def build_linear(text: Text) -> LinearIndex:
    lam = text.ell
    layers = [build_layer(ra.j, text.n, ra.ranks, text.sigma ** ra.j) for ra in iter_rank_arrays(text, lam - 1)]
    return LinearIndex(text, lam, text.saw, layers)


def ftr_access(idx: LinearIndex, j: int, i: int) -> int:
    return idx.ftr_access(j, i)


def query_linear(idx: LinearIndex, a: int, b: int, debug: bool = False) -> SawAnswer:
    return idx.query(a, b, debug=debug)


def query_loglog(idx: LinearIndex, a: int, b: int) -> SawAnswer:
    return idx.query_loglog(a, b)
