"""Brute-force ground truth and executable combinatorial bounds.

Words are handled as base-sigma integers (``a = 1`` is digit 0), so the
lexicographically smallest absent word is simply the smallest missing code.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BoundViolated, RangeOutOfBounds, WindowTooLarge
from .text import Text

MAX_WINDOW = 10_000


def word_code(word: Sequence[int], sigma: int) -> int:
    code = 0
    for c in word:
        code = code * sigma + (c - 1)
    return code


def code_word(code: int, length: int, sigma: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        code, d = divmod(code, sigma)
        out.append(d + 1)
    return tuple(reversed(out))


def gram_codes(seq: Sequence[int], j: int, sigma: int) -> set[int]:
    """Codes of all length-j substrings of ``seq``."""
    out = set()
    if j > len(seq):
        return out
    top = sigma ** (j - 1)
    code = word_code(seq[:j], sigma)
    out.add(code)
    for i in range(j, len(seq)):
        code = (code - (seq[i - j] - 1) * top) * sigma + (seq[i] - 1)
        out.add(code)
    return out


@dataclass
class OracleResult:
    length: int
    absent_word: tuple[int, ...]
    all_words: dict[int, set[int]] = field(repr=False)

    def occurs(self, word: Sequence[int], sigma: int) -> bool:
        words = self.all_words.get(len(word))
        if words is None:
            raise KeyError(f"no words of length {len(word)} were collected")
        return word_code(word, sigma) in words


def shortest_absent(seq: Sequence[int], sigma: int) -> OracleResult:
    """Shortest word over ``1..sigma`` absent from ``seq`` (smallest such word in lexicographic order)."""
    seq = [int(c) for c in seq]
    all_words: dict[int, set[int]] = {}
    j = 1
    while True:
        words = gram_codes(seq, j, sigma)
        all_words[j] = words
        if len(words) < sigma ** j:
            missing = next(c for c in range(sigma ** j) if c not in words)
            return OracleResult(j, code_word(missing, j, sigma), all_words)
        j += 1


def oracle_saw(text: Text, a: int, b: int) -> OracleResult:
    if not 1 <= a <= b <= text.n:
        raise RangeOutOfBounds(f"range [{a}, {b}] outside [1, {text.n}]")
    if b - a + 1 > MAX_WINDOW:
        raise WindowTooLarge(f"window of {b - a + 1} letters exceeds {MAX_WINDOW}")
    return shortest_absent(text.tokens[a - 1:b].tolist(), text.sigma)


def iter_range_oracle(seq: Sequence[int], sigma: int):
    """Yield ``(a, b, length, grams)`` for every range, sweeping b rightwards for each a.

    ``grams[j]`` is the set of codes of the length-j words of ``seq[a..b]``;
    it is mutated as the sweep continues, so consume it before advancing.
    """
    seq = [int(c) for c in seq]
    n = len(seq)
    jmax = 1
    while sigma ** jmax <= n:
        jmax += 1
    powers = [sigma ** j for j in range(jmax + 2)]
    for a in range(n):
        grams: list[set[int]] = [set() for _ in range(jmax + 1)]
        for b in range(a, n):
            code = 0
            for j in range(1, min(b - a + 1, jmax) + 1):
                code += (seq[b - j + 1] - 1) * powers[j - 1]
                grams[j].add(code)
            lam = 1
            while len(grams[lam]) == powers[lam]:
                lam += 1
            yield a + 1, b + 1, lam, grams


def all_range_lengths(seq: Sequence[int], sigma: int) -> dict[tuple[int, int], int]:
    """Shortest absent length of ``seq[a..b]`` for every 1-based range."""
    return {(a, b): lam for a, b, lam, _ in iter_range_oracle(seq, sigma)}


def period(s: Sequence) -> int:
    """Smallest period via the border (failure) function."""
    n = len(s)
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = border[k - 1]
        if s[i] == s[k]:
            k += 1
        border[i] = k
    return n - border[-1]


def is_period(s: Sequence, p: int) -> bool:
    return all(s[i] == s[i + p] for i in range(len(s) - p))


@dataclass(frozen=True)
class ExtensionReport:
    lam: int
    m: int
    slack: float  # ceiling on the extended answer minus m


def extension_ceiling(lam: int, y_len: int, sigma: int) -> float:
    if y_len == 0:
        return lam + 10
    return lam + max(10.0, 4 + math.log(y_len / lam, sigma))


def check_extension_bounds(x: Sequence[int], y: Sequence[int], sigma: int) -> ExtensionReport:
    """Measure how far appending ``y`` to ``x`` moves the shortest absent length, and check both bounds."""
    if not x:
        raise ValueError("x must be nonempty")
    if sigma < 2:
        raise ValueError("sigma must be at least 2")
    lam = shortest_absent(x, sigma).length
    m = shortest_absent(list(x) + list(y), sigma).length
    ceiling = extension_ceiling(lam, len(y), sigma)
    if not lam <= m <= ceiling:
        raise BoundViolated(f"answer {m} for xy outside [{lam}, {ceiling:.3f}] (|x|={len(x)}, |y|={len(y)})")
    tau = max(16, -(-len(y) // m))
    if m - lam > 10 + 2 * math.log(tau, sigma):
        raise BoundViolated(f"m - lam = {m - lam} exceeds 10 + 2 log_sigma {tau}")
    return ExtensionReport(lam, m, ceiling - m)


def check_context_cover(s: Sequence[int], w: Sequence[int], k: int, sigma: int) -> bool:
    """If every ``U + w`` with ``|U| = k`` occurs in ``s``, assert ``|s| >= |w| sigma^k / 4``.

    Returns whether the premise held.
    """
    if not w:
        raise ValueError("w must be nonempty")
    grams = gram_codes(list(s), k + len(w), sigma)
    tail = word_code(w, sigma)
    shift = sigma ** len(w)
    if not all(u * shift + tail in grams for u in range(sigma ** k)):
        return False
    if len(s) < len(w) * sigma ** k / 4:
        raise BoundViolated(f"|s| = {len(s)} < |w| sigma^k / 4 = {len(w) * sigma ** k / 4}")
    return True
