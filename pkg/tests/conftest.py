import numpy as np
import pytest

from isaw import Text, build_dense, build_linear, build_text
from isaw.oracle import word_code

REFERENCE_T = "abaabaaabbabbbaaab"


@pytest.fixture(scope="session")
def reference_text():
    return build_text(REFERENCE_T)


@pytest.fixture(scope="session")
def reference_dense(reference_text):
    return build_dense(reference_text)


@pytest.fixture(scope="session")
def reference_linear(reference_text):
    return build_linear(reference_text)


def letters(text, codes):
    return "".join(text.decode_word(codes))


def random_text(rng, n, sigma):
    return Text.from_codes(rng.integers(1, sigma + 1, n), sigma)


def assert_valid_answer(text, a, b, ans, lam, grams):
    """Check length against the brute-force value and that the witness is really absent."""
    assert ans.length == lam, (a, b, ans, lam)
    word = ans.word(text)
    if lam < len(grams):
        assert word_code(word, text.sigma) not in grams[lam], (a, b, ans)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def record_criterion(number: int, passed: bool, detail: str) -> str:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
