"""Per-length occurrence arrays: ranks with every word appended, previous-occurrence links, coverage tests."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import IndexOutOfRange, InternalInvariantViolation, LayerBeyondEll, RangeOutOfBounds
from .succinct import Rmq
from .text import RankArray, SawAnswer, Substring, Text


def previous_links(ranks: np.ndarray, sigma_j: int) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(app, pre)`` for a rank array whose values lie in ``[1, sigma_j]``."""
    app = np.concatenate([np.asarray(ranks, dtype=np.int64), np.arange(1, sigma_j + 1, dtype=np.int64)])
    return app, _kernels.previous_occurrence(app, sigma_j)


def suffix_minima(pre: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``(values, argmins)`` where ``values[t] = min(pre[t:])`` and argmins is the leftmost such index (both 0-based)."""
    values = np.minimum.accumulate(pre[::-1])[::-1]
    idx = np.arange(pre.size, dtype=np.int64)
    candidate = np.where(pre == values, idx, pre.size)
    argmins = np.minimum.accumulate(candidate[::-1])[::-1]
    return values, argmins


def ftr_row(pre: np.ndarray, j: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """For ``i = 1..n``: rightmost start s with ``T[s..i]`` holding every length-j word (0 if none),
    and the 1-based index into ``pre`` where that minimum was found."""
    values, argmins = suffix_minima(pre)
    first = np.maximum(np.arange(1, n + 1) - j + 1, 0)  # 0-based index of max(1, i-j+2)
    return values[first], argmins[first] + 1


def argmin_witness(j: int, n: int, value: int, k: int) -> SawAnswer:
    """Length-j witness from a coverage minimum ``value`` found at ``pre`` index ``k``."""
    if value > 0:
        return SawAnswer(j, Substring(value, value + j - 1))
    if k > n - j + 1:
        raise InternalInvariantViolation(
            f"zero minimum at appended index {k} > {n - j + 1}: some length-{j} word is absent from the text"
        )
    return SawAnswer(j, Substring(k, k + j - 1))


class OccLayer:
    """APP_j / PRE_j for one word length j, with an RMQ over PRE_j."""

    def __init__(self, j: int, n: int, app: np.ndarray, pre: np.ndarray):
        self.j = j
        self.n = n
        self.app = app
        self.pre = pre
        self.rmq_pre = Rmq(pre)

    def __len__(self) -> int:
        return int(self.pre.size)

    def _check_range(self, a: int, b: int) -> None:
        if not 1 <= a <= b <= self.n:
            raise RangeOutOfBounds(f"range [{a}, {b}] outside [1, {self.n}]")

    def covers_all(self, a: int, b: int) -> bool:
        """True iff every length-j word occurs in ``T[a..b]``."""
        self._check_range(a, b)
        k = self.rmq_pre.argmin(max(1, b - self.j + 2), len(self))
        return int(self.pre[k - 1]) >= a

    def ftr_value(self, i: int) -> tuple[int, int]:
        """``(value, argmin)`` of ``min(pre[max(1, i-j+2)..])``."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} outside [1, {self.n}]")
        k = self.rmq_pre.argmin(max(1, i - self.j + 2), len(self))
        return int(self.pre[k - 1]), k

    def witness_from_argmin(self, value: int, k: int) -> SawAnswer:
        return argmin_witness(self.j, self.n, value, k)


def build_occ(text: Text, ranks: RankArray) -> OccLayer:
    j = ranks.j
    if j >= text.ell:
        raise LayerBeyondEll(f"length {j} is not below the shortest absent word length {text.ell}")
    app, pre = previous_links(ranks.ranks, text.sigma ** j)
    return OccLayer(j, text.n, app, pre)
