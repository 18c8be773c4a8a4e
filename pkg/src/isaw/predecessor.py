"""Searches over short monotone columns (at most one entry per word length).

A column of coverage starts is non-increasing in the word length, so "the
smallest length whose start falls below a" is a predecessor query. The
columns hold at most ``log_sigma n`` keys, so plain binary search needs at
most ``ceil(log2 64) = 6`` probes on any 64-bit machine. Swap the callables
on an index class to plug in another strategy.
"""
from typing import Callable


def first_true(pred: Callable[[int], bool], lo: int, hi: int) -> int:
    """Smallest ``j`` in ``[lo, hi]`` with ``pred(j)`` for a monotone predicate; ``hi + 1`` if none."""
    if hi < lo or not pred(hi):
        return hi + 1
    while lo < hi:
        mid = (lo + hi) >> 1
        if pred(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def first_below(get: Callable[[int], int], lo: int, hi: int, a: int) -> int:
    """Smallest ``j`` in ``[lo, hi]`` with ``get(j) < a`` for non-increasing ``get``; ``hi + 1`` if none."""
    if hi < lo or get(hi) >= a:
        return hi + 1
    while lo < hi:
        mid = (lo + hi) >> 1
        if get(mid) < a:
            hi = mid
        else:
            lo = mid + 1
    return lo
