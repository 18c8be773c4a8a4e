"""Texts over integer alphabets, substring ranks and the global shortest absent word.

Positions are 1-based in every public signature; arrays are stored 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from . import _kernels
from .errors import EmptyInput, LengthOutOfRange, SigmaTooSmall, UnaryAlphabet

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class Substring:
    """Witness ``T[i..j]``."""

    i: int
    j: int

    def word(self, tokens: np.ndarray) -> tuple[int, ...]:
        return tuple(int(x) for x in tokens[self.i - 1:self.j])


@dataclass(frozen=True)
class Extension:
    """Witness ``T[i..j] + alpha``; ``i == j == 0`` stands for the empty prefix."""

    i: int
    j: int
    alpha: int

    def word(self, tokens: np.ndarray) -> tuple[int, ...]:
        if self.i == 0:
            return (self.alpha,)
        return tuple(int(x) for x in tokens[self.i - 1:self.j]) + (self.alpha,)


Witness = Union[Substring, Extension]


@dataclass(frozen=True)
class SawAnswer:
    length: int
    witness: Witness

    def word(self, text: "Text") -> tuple[int, ...]:
        """Decode the witness into alphabet codes."""
        w = self.witness.word(text.tokens)
        if len(w) != self.length:
            raise AssertionError(f"witness {self.witness} decodes to length {len(w)}, expected {self.length}")
        return w


class Text:
    """A token sequence remapped to codes ``1..sigma``.

    ``alphabet[c - 1]`` is the original token for code ``c``. Codes above
    ``len(alphabet)`` are letters of the query alphabet that never occur.
    """

    def __init__(self, tokens: np.ndarray, sigma: int, alphabet: tuple = ()):
        tokens = np.ascontiguousarray(tokens, dtype=np.int64)
        if tokens.size == 0:
            raise EmptyInput("text must contain at least one token")
        if sigma < 2:
            raise UnaryAlphabet(f"alphabet size must be at least 2, got {sigma}")
        if tokens.min() < 1 or tokens.max() > sigma:
            raise SigmaTooSmall(f"codes must lie in [1, {sigma}]")
        tokens.setflags(write=False)
        self.tokens = tokens
        self.sigma = int(sigma)
        self.alphabet = tuple(alphabet) if alphabet else tuple(range(1, self.sigma + 1))

    @classmethod
    def from_codes(cls, codes: Sequence[int], sigma: int) -> "Text":
        """Wrap codes already in ``1..sigma`` without remapping."""
        return cls(np.asarray(codes, dtype=np.int64), sigma)

    @property
    def n(self) -> int:
        return int(self.tokens.size)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Text(n={self.n}, sigma={self.sigma})"

    def encode(self, token) -> int:
        return self._code_of[token]

    def decode(self, code: int):
        """Original token for ``code``; absent letters decode to ``'#<code>'``."""
        if 1 <= code <= len(self.alphabet):
            return self.alphabet[code - 1]
        if 1 <= code <= self.sigma:
            return f"#{code}"
        raise KeyError(code)

    def decode_word(self, codes: Sequence[int]) -> list:
        return [self.decode(c) for c in codes]

    @cached_property
    def _code_of(self) -> dict:
        return {tok: c for c, tok in enumerate(self.alphabet, start=1)}

    @cached_property
    def suffix_array(self) -> np.ndarray:
        return suffix_order(self)

    @cached_property
    def lcp_array(self) -> np.ndarray:
        """``lcp[k]`` = LCP of suffixes ``sa[k-1]`` and ``sa[k]``; ``lcp[0] = 0``."""
        return _kernels.kasai_lcp(self.tokens, self.suffix_array - 1)

    @cached_property
    def saw(self) -> SawAnswer:
        return global_saw(self)

    @property
    def ell(self) -> int:
        """Length of the shortest absent words of the whole text."""
        return self.saw.length


def build_text(raw, sigma: int | None = None) -> Text:
    """Remap ``raw`` to codes ``1..sigma`` preserving the order of token values.

    ``raw`` may be ``str`` (characters), ``bytes`` or any sequence of mutually
    comparable tokens.
    """
    if isinstance(raw, (bytes, bytearray, memoryview)):
        arr = np.frombuffer(bytes(raw), dtype=np.uint8)
    elif isinstance(raw, str):
        arr = np.array(list(raw))
    elif isinstance(raw, np.ndarray):
        arr = raw.ravel()
    else:
        arr = None
        seq = list(raw)
        if seq and all(isinstance(x, (int, np.integer)) for x in seq):
            arr = np.asarray(seq, dtype=np.int64)
    if arr is not None:
        if arr.size == 0:
            raise EmptyInput("text must contain at least one token")
        values, inverse = np.unique(arr, return_inverse=True)
        alphabet = tuple(v.item() for v in values)
        codes = inverse.astype(np.int64) + 1
    else:
        if not seq:
            raise EmptyInput("text must contain at least one token")
        alphabet = tuple(sorted(set(seq)))
        code_of = {tok: c for c, tok in enumerate(alphabet, start=1)}
        codes = np.fromiter((code_of[x] for x in seq), dtype=np.int64, count=len(seq))

    distinct = len(alphabet)
    if sigma is None:
        if distinct < 2:
            raise UnaryAlphabet("text has a single distinct token; pass sigma explicitly")
        sigma = distinct
    elif sigma < 2:
        raise UnaryAlphabet(f"sigma must be at least 2, got {sigma}")
    elif sigma < distinct:
        raise SigmaTooSmall(f"sigma={sigma} but the text has {distinct} distinct tokens")
    return Text(codes, sigma, alphabet)


def suffix_order(text: Text) -> np.ndarray:
    """Suffix array by prefix doubling: 1-based starts in lexicographic order."""
    s = text.tokens
    n = s.size
    rank = s.copy()
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[:n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1, r2 = rank[sa], second[sa]
        bumps = np.empty(n, dtype=np.int64)
        bumps[0] = 1
        bumps[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(bumps)
        rank = new_rank
        if rank[sa[-1]] == n or k >= n:
            break
        k <<= 1
    return sa.astype(np.int64) + 1


def _check_length(text: Text, j: int) -> None:
    if not 1 <= j <= text.n:
        raise LengthOutOfRange(f"length {j} outside [1, {text.n}]")


@dataclass(frozen=True)
class RankArray:
    """``ranks[i-1]`` is the rank in Sigma^j of ``T[i..i+j-1]`` (1-based)."""

    j: int
    ranks: np.ndarray

    def __len__(self) -> int:
        return int(self.ranks.size)


def iter_rank_arrays(text: Text, j_max: int):
    """Yield ``RankArray`` for ``j = 1..j_max``, each derived from the previous in O(n)."""
    s = text.tokens - 1
    sigma = text.sigma
    n = text.n
    ranks0 = s.copy()  # zero-based base-sigma value of each j-gram
    for j in range(1, min(j_max, n) + 1):
        if j > 1:
            if sigma ** j >= _INT64_SAFE and ranks0.dtype != object:
                ranks0 = ranks0.astype(object)
            ranks0 = ranks0[:n - j + 1] * sigma + s[j - 1:]
        yield RankArray(j, ranks0 + 1)


def rank_substrings(text: Text, j: int) -> RankArray:
    _check_length(text, j)
    for ra in iter_rank_arrays(text, j):
        pass
    return ra


def substring_complexity(text: Text, j: int) -> int:
    """Number of distinct length-j substrings, read off the suffix and LCP arrays."""
    _check_length(text, j)
    sa = text.suffix_array
    lcp = text.lcp_array
    long_enough = (text.n - sa + 1) >= j
    starts_group = lcp < j
    return int(np.count_nonzero(long_enough & starts_group))


def _floor_log(n: int, base: int) -> int:
    e, p = 0, 1
    while p * base <= n:
        p *= base
        e += 1
    return e


def _smallest_missing(ranks: np.ndarray) -> int:
    """Smallest positive integer not present in ``ranks``."""
    u = np.unique(ranks)
    gaps = np.nonzero(u != np.arange(1, u.size + 1))[0]
    return int(gaps[0]) + 1 if gaps.size else int(u.size) + 1


def global_saw(text: Text) -> SawAnswer:
    """Shortest absent word of the whole text with an extension witness."""
    n, sigma = text.n, text.sigma
    present = np.zeros(sigma + 1, dtype=bool)
    present[text.tokens] = True
    if not present[1:].all():
        alpha = int(np.argmin(present[1:])) + 1
        return SawAnswer(1, Extension(0, 0, alpha))

    prev = None
    lam = None
    for ra in iter_rank_arrays(text, n):
        j = ra.j
        power = sigma ** j
        if power > n - j + 1:
            lam = j
        elif np.count_nonzero(np.bincount(ra.ranks, minlength=power + 1)[1:]) < power:
            lam = j
        if lam is not None:
            missing = _smallest_missing(ra.ranks)
            break
        prev = ra
    else:
        # every j-gram up to j = n is present: impossible for sigma >= 2
        raise AssertionError("no absent length found")

    assert lam <= _floor_log(n, sigma) + 1, (lam, n, sigma)
    prefix_rank, alpha0 = divmod(missing - 1, sigma)
    assert prev is not None and lam >= 2
    hits = np.flatnonzero(prev.ranks == prefix_rank + 1)
    i = int(hits[0]) + 1
    return SawAnswer(lam, Extension(i, i + lam - 2, alpha0 + 1))
