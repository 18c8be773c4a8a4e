import io
import struct

import numpy as np
import pytest

from isaw import Text, build_dense, build_linear, build_text, load_index, save_index
from isaw.errors import ChecksumMismatch, IndexFormatError
from isaw.index_file import read_header, read_index, text_checksum, write_index

from conftest import random_text


def roundtrip(idx, text=None):
    buf = io.BytesIO()
    write_index(idx, buf)
    return read_index(buf.getvalue(), text or idx.text)


@pytest.mark.parametrize("builder", [build_dense, build_linear])
@pytest.mark.parametrize("n, sigma", [(1, 2), (2, 2), (18, 2), (300, 3), (5000, 2), (4000, 5)])
def test_roundtrip_answers(builder, n, sigma):
    rng = np.random.default_rng(n * sigma)
    t = random_text(rng, n, sigma)
    idx = builder(t)
    back = roundtrip(idx)
    assert back.lam == idx.lam and back.global_answer == idx.global_answer
    for _ in range(400):
        a, b = sorted(int(x) for x in rng.integers(1, n + 1, 2))
        assert back.query(a, b) == idx.query(a, b)


def test_roundtrip_string_alphabet(tmp_path):
    t = build_text(["x", "yy", "x", "z"])
    path = tmp_path / "i.isaw"
    size = save_index(build_linear(t), path, token_format="ascii-lines")
    assert size == path.stat().st_size
    header = read_header(path)
    assert (header.mode, header.alphabet, header.token_format) == ("linear", ("x", "yy", "z"), "ascii-lines")
    assert load_index(path, t).query(1, 4) == build_linear(t).query(1, 4)


def test_phantom_letter_roundtrip():
    t = build_text(b"aaaa", sigma=2)
    back = roundtrip(build_dense(t))
    assert back.query(1, 4).length == 1


def test_checksum_mismatch(reference_text):
    idx = build_linear(reference_text)
    other = build_text("abaabaaabbabbbaaaa")
    with pytest.raises(ChecksumMismatch):
        roundtrip(idx, other)
    with pytest.raises(ChecksumMismatch):
        roundtrip(idx, build_text("ab"))


def test_checksum_value():
    # FNV-1a over the u32le codes 1, 2
    h = 0xCBF29CE484222325
    for byte in b"\x01\x00\x00\x00\x02\x00\x00\x00":
        h = ((h ^ byte) * 0x100000001B3) % 2 ** 64
    assert text_checksum(Text.from_codes([1, 2], 2)) == h


def corrupt(data: bytes, offset: int, value: bytes) -> bytes:
    return data[:offset] + value + data[offset + len(value):]


def test_rejects_bad_headers(reference_text):
    buf = io.BytesIO()
    write_index(build_dense(reference_text), buf)
    data = buf.getvalue()
    with pytest.raises(IndexFormatError, match="magic"):
        read_index(corrupt(data, 0, b"XSAW"), reference_text)
    with pytest.raises(IndexFormatError, match="version"):
        read_index(corrupt(data, 4, struct.pack("<I", 99)), reference_text)
    with pytest.raises(IndexFormatError, match="mode"):
        read_index(corrupt(data, 8, struct.pack("<I", 7)), reference_text)
    with pytest.raises(IndexFormatError, match="truncated"):
        read_index(data[:-3], reference_text)
    with pytest.raises(IndexFormatError, match="trailing"):
        read_index(data + b"\0", reference_text)


def test_header_layout(reference_text):
    buf = io.BytesIO()
    write_index(build_linear(reference_text), buf)
    magic, version, mode, n, sigma, lam = struct.unpack_from("<4sIIQQQ", buf.getvalue())
    assert (magic, version, mode, n, sigma, lam) == (b"ISAW", 1, 2, 18, 2, 4)
