"""Minimal order-j fragments: shortest windows containing every length-j word.

Two n-bit vectors mark their starts and ends. Minimal fragments are never
nested, so the k-th start pairs with the k-th end.
"""
from __future__ import annotations

import numpy as np

from .errors import RangeOutOfBounds
from .occurrences import OccLayer, argmin_witness, suffix_minima
from .succinct import BitVector
from .text import SawAnswer, Substring


def fragment_endpoints(pre: np.ndarray, j: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """1-based ``(starts, ends)`` of all minimal order-j fragments.

    Window ``T[s..b]`` with ``s`` the rightmost covering start is minimal
    exactly when dropping ``T[b]`` loses coverage, i.e. when the link
    ``pre[b-j+1]`` falls below ``s``.
    """
    values, _ = suffix_minima(pre)
    b = np.arange(j, n + 1, dtype=np.int64)
    starts = values[b - j + 1]
    keep = pre[b - j] < starts
    return starts[keep], b[keep]


class FragmentLayer:
    def __init__(self, j: int, n: int, sp: BitVector, ep: BitVector):
        if sp.ones != ep.ones:
            raise ValueError("start and end vectors must mark the same number of fragments")
        self.j = j
        self.n = n
        self.sp = sp
        self.ep = ep

    @classmethod
    def from_endpoints(cls, j: int, n: int, starts, ends) -> "FragmentLayer":
        return cls(j, n, BitVector.from_positions(starts, n), BitVector.from_positions(ends, n))

    @property
    def count(self) -> int:
        return self.sp.ones

    @property
    def nbytes(self) -> int:
        return self.sp.nbytes + self.ep.nbytes

    def fragments(self) -> list[tuple[int, int]]:
        return list(zip(self.sp.positions().tolist(), self.ep.positions().tolist()))

    def _first_end_from(self, a: int) -> int:
        """End of the leftmost minimal fragment starting at or after ``a``; 0 if none."""
        t = self.sp.rank1(a - 1) + 1
        if t > self.sp.ones:
            return 0
        return self.ep.select1(t)

    def has_all_order_j(self, a: int, b: int) -> bool:
        """True iff ``T[a..b]`` contains every length-j word."""
        if not 1 <= a <= b <= self.n:
            raise RangeOutOfBounds(f"range [{a}, {b}] outside [1, {self.n}]")
        e = self._first_end_from(a)
        return 0 < e <= b

    def witness_order_j(self, occ, a: int, b: int) -> SawAnswer:
        """A length-j word absent from ``T[a..b]``, assuming one exists.

        ``occ`` supplies ``ftr_value(i) -> (value, argmin)`` for the fallback
        used when no minimal fragment starts at or after ``a``.
        """
        e = self._first_end_from(a)
        if e:
            return SawAnswer(self.j, Substring(e - self.j + 1, e))
        value, k = occ.ftr_value(b)
        return argmin_witness(self.j, self.n, value, k)


def build_fragments(layer: OccLayer) -> FragmentLayer:
    starts, ends = fragment_endpoints(layer.pre, layer.j, layer.n)
    return FragmentLayer.from_endpoints(layer.j, layer.n, starts, ends)
