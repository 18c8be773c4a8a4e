from __future__ import annotations

from .errors import RangeOutOfBounds
from .text import Extension, SawAnswer, Text


class IndexBase:
    """State and helpers shared by the dense and linear indexes."""

    mode = ""

    def __init__(self, text: Text, lam: int, global_answer: SawAnswer):
        self.text = text
        self.n = text.n
        self.sigma = text.sigma
        self.lam = lam
        self.global_answer = global_answer
        self._tokens = memoryview(text.tokens)

    def _check_range(self, a: int, b: int) -> None:
        if not 1 <= a <= b <= self.n:
            raise RangeOutOfBounds(f"range [{a}, {b}] outside [1, {self.n}]")

    def _single_letter(self, a: int) -> SawAnswer:
        # a one-letter window misses every other letter
        return SawAnswer(1, Extension(0, 0, 2 if self._tokens[a - 1] == 1 else 1))

    def query(self, a: int, b: int) -> SawAnswer:
        raise NotImplementedError
