"""Index with every coverage start stored explicitly: O(n log_sigma n) words, constant-bounded queries."""
from __future__ import annotations

import numpy as np

from . import _kernels
from ._base import IndexBase
from .occurrences import argmin_witness, ftr_row, previous_links
from .succinct import PackedArray
from .text import SawAnswer, Text, iter_rank_arrays


class DenseIndex(IndexBase):
    """``ftr[i, j]``: rightmost start s such that ``T[s..i]`` contains every length-j word (0 if none).

    ``sat`` holds the matching argmin index into the previous-occurrence
    array, needed for a witness when the start is 0. Entries for one text
    position are adjacent, so a query reads one contiguous column. Both
    tables are bit-packed at ``ceil(log2(n + 1))`` and
    ``ceil(log2(2 n + 2))`` bits per entry.
    """

    mode = "dense"

    def __init__(self, text: Text, lam: int, global_answer: SawAnswer, ftr: PackedArray, sat: PackedArray):
        super().__init__(text, lam, global_answer)
        if len(ftr) != self.n * (lam - 1) or len(sat) != len(ftr):
            raise ValueError(f"tables must hold {self.n} x {lam - 1} entries")
        self.ftr = ftr
        self.sat = sat
        self._width = lam - 1

    @property
    def nbytes(self) -> int:
        return self.ftr.nbytes + self.sat.nbytes

    def column(self, i: int) -> np.ndarray:
        """``FTR[1..lam-1][i]`` as an array."""
        w = self._width
        return np.array([self.ftr[(i - 1) * w + k] for k in range(w)], dtype=np.int64)

    def query(self, a: int, b: int) -> SawAnswer:
        self._check_range(a, b)
        if a == b:
            return self._single_letter(a)
        w = self._width
        if w == 0:
            return self.global_answer
        ftr, sat = self.ftr, self.sat
        j, value, k = _kernels.dense_query(ftr.words, ftr.width, sat.words, sat.width, w, a, b)
        if j > w:
            return self.global_answer
        return argmin_witness(j, self.n, value, k)


def build_dense(text: Text) -> DenseIndex:
    n, lam = text.n, text.ell
    width = lam - 1
    ftr = np.zeros((n, width), dtype=np.uint64)
    sat = np.zeros((n, width), dtype=np.uint64)
    for ra in iter_rank_arrays(text, width):
        _, pre = previous_links(ra.ranks, text.sigma ** ra.j)
        values, argmins = ftr_row(pre, ra.j, n)
        ftr[:, ra.j - 1] = values
        sat[:, ra.j - 1] = argmins
    return DenseIndex(
        text, lam, text.saw,
        PackedArray.from_values(ftr, n.bit_length()),
        PackedArray.from_values(sat, (2 * n + 1).bit_length()),
    )


def query_dense(idx: DenseIndex, a: int, b: int) -> SawAnswer:
    return idx.query(a, b)
