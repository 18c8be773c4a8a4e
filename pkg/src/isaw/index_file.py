"""On-disk index format.

Everything is little-endian. Layout::

    magic "ISAW" | u32 version | u32 mode (1 dense, 2 linear)
    u64 n | u64 sigma | u64 lambda | u64 text checksum | u32 token format | u32 reserved
    section: alphabet table
    section: global answer record (5 x u64: length, kind, i, j, alpha)
    dense:  section ftr table | section satellite table
    linear: one section per word length j = 1..lambda-1

A section is a u64 byte count followed by that many bytes. Bit vectors are
stored as ``u64 length`` plus their words; rank/select and excess
directories are rebuilt on load. The checksum is 64-bit FNV-1a (offset
basis 0xcbf29ce484222325, prime 0x100000001b3) over the text codes written
as u32le, so an index is only ever paired with the text it was built from.
"""
from __future__ import annotations

import io
import struct
from pathlib import Path

import numpy as np

from . import _kernels
from .dense import DenseIndex
from .errors import ChecksumMismatch, IndexFormatError
from .fragments import FragmentLayer
from .linear import LinearIndex, LinearLayer, MonotoneMinima
from .succinct import BitVector, PackedArray, Rmq
from .text import Extension, SawAnswer, Substring, Text

MAGIC = b"ISAW"
VERSION = 1
MODES = {"dense": 1, "linear": 2}
TOKEN_FORMATS = {"codes": 0, "bytes": 1, "u32le": 2, "ascii-lines": 3}

_HEAD = struct.Struct("<4sII")
_META = struct.Struct("<QQQQII")
_ANSWER = struct.Struct("<5Q")


def text_checksum(text: Text) -> int:
    return int(_kernels.fnv1a64(text.tokens.astype("<u4").view(np.uint8)))


class _Writer:
    def __init__(self, out):
        self.out = out

    def raw(self, data: bytes) -> None:
        self.out.write(data)

    def section(self, payload: bytes) -> None:
        self.out.write(struct.pack("<Q", len(payload)))
        self.out.write(payload)


class _Reader:
    def __init__(self, data: bytes):
        self.data = memoryview(data)
        self.pos = 0

    def take(self, size: int) -> memoryview:
        if self.pos + size > len(self.data):
            raise IndexFormatError("index file is truncated")
        chunk = self.data[self.pos:self.pos + size]
        self.pos += size
        return chunk

    def unpack(self, st: struct.Struct) -> tuple:
        return st.unpack(self.take(st.size))

    def section(self) -> "_Reader":
        (size,) = struct.unpack("<Q", self.take(8))
        return _Reader(self.take(size))

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def words(self, count: int) -> np.ndarray:
        return np.frombuffer(self.take(8 * count), dtype="<u8").astype(np.uint64)

    def done(self) -> None:
        if self.pos != len(self.data):
            raise IndexFormatError(f"{len(self.data) - self.pos} unexpected trailing bytes")


def _bitvector_bytes(bv: BitVector) -> bytes:
    return struct.pack("<Q", bv.length) + bv.words.astype("<u8").tobytes()


def _read_bitvector(r: _Reader) -> BitVector:
    length = r.u64()
    return BitVector(r.words((length + 63) // 64), length)


def _packed_bytes(arr: PackedArray) -> bytes:
    return struct.pack("<QQ", arr.width, arr.size) + arr.words.astype("<u8").tobytes()


def _read_packed(r: _Reader) -> PackedArray:
    width, size = r.u64(), r.u64()
    return PackedArray(r.words((size * width + 63) // 64), width, size)


def _alphabet_bytes(alphabet: tuple) -> bytes:
    """u32 kind (0 integers, 1 strings), u64 count, then i64 values or length-prefixed UTF-8."""
    buf = io.BytesIO()
    if all(isinstance(x, (int, np.integer)) for x in alphabet):
        buf.write(struct.pack("<IQ", 0, len(alphabet)))
        buf.write(np.asarray(alphabet, dtype="<i8").tobytes())
    else:
        buf.write(struct.pack("<IQ", 1, len(alphabet)))
        for x in alphabet:
            data = str(x).encode("utf-8")
            buf.write(struct.pack("<Q", len(data)))
            buf.write(data)
    return buf.getvalue()


def _read_alphabet(r: _Reader) -> tuple:
    kind, count = r.unpack(struct.Struct("<IQ"))
    if kind == 0:
        out = tuple(int(x) for x in np.frombuffer(r.take(8 * count), dtype="<i8"))
    elif kind == 1:
        out = tuple(bytes(r.take(r.u64())).decode("utf-8") for _ in range(count))
    else:
        raise IndexFormatError(f"unknown alphabet kind {kind}")
    r.done()
    return out


def _answer_bytes(ans: SawAnswer) -> bytes:
    w = ans.witness
    if isinstance(w, Extension):
        return _ANSWER.pack(ans.length, 1, w.i, w.j, w.alpha)
    return _ANSWER.pack(ans.length, 0, w.i, w.j, 0)


def _read_answer(r: _Reader) -> SawAnswer:
    length, kind, i, j, alpha = r.unpack(_ANSWER)
    r.done()
    if kind == 0:
        return SawAnswer(length, Substring(i, j))
    if kind == 1:
        return SawAnswer(length, Extension(i, j, alpha))
    raise IndexFormatError(f"unknown witness kind {kind}")


def write_index(idx: DenseIndex | LinearIndex, out, token_format: str = "codes") -> None:
    """Serialize ``idx`` to the binary stream ``out``."""
    text = idx.text
    w = _Writer(out)
    w.raw(_HEAD.pack(MAGIC, VERSION, MODES[idx.mode]))
    w.raw(_META.pack(idx.n, idx.sigma, idx.lam, text_checksum(text), TOKEN_FORMATS[token_format], 0))
    w.section(_alphabet_bytes(text.alphabet))
    w.section(_answer_bytes(idx.global_answer))
    if isinstance(idx, DenseIndex):
        w.section(_packed_bytes(idx.ftr))
        w.section(_packed_bytes(idx.sat))
        return
    for layer in idx.layers:
        w.section(
            struct.pack("<Q", layer.j)
            + _bitvector_bytes(layer.minima.bj)
            + _bitvector_bytes(layer.rmq.bp)
            + _bitvector_bytes(layer.frag.sp)
            + _bitvector_bytes(layer.frag.ep)
        )


def save_index(idx: DenseIndex | LinearIndex, path, token_format: str = "codes") -> int:
    """Write ``idx`` to ``path`` and return the file size in bytes."""
    with open(path, "wb") as f:
        write_index(idx, f, token_format)
        return f.tell()


class IndexHeader:
    def __init__(self, mode: str, n: int, sigma: int, lam: int, checksum: int, token_format: str, alphabet: tuple):
        self.mode = mode
        self.n = n
        self.sigma = sigma
        self.lam = lam
        self.checksum = checksum
        self.token_format = token_format
        self.alphabet = alphabet


def _read_header(r: _Reader) -> IndexHeader:
    magic, version, mode = r.unpack(_HEAD)
    if magic != MAGIC:
        raise IndexFormatError(f"bad magic {bytes(magic)!r}")
    if version != VERSION:
        raise IndexFormatError(f"unsupported format version {version} (this reader handles {VERSION})")
    modes = {v: k for k, v in MODES.items()}
    if mode not in modes:
        raise IndexFormatError(f"unknown mode {mode}")
    n, sigma, lam, checksum, fmt, _ = r.unpack(_META)
    formats = {v: k for k, v in TOKEN_FORMATS.items()}
    if fmt not in formats:
        raise IndexFormatError(f"unknown token format {fmt}")
    alphabet = _read_alphabet(r.section())
    return IndexHeader(modes[mode], n, sigma, lam, checksum, formats[fmt], alphabet)


def read_header(path) -> IndexHeader:
    """Header fields only, e.g. to learn how to parse the matching text."""
    return _read_header(_Reader(Path(path).read_bytes()))


def read_index(data: bytes, text: Text) -> DenseIndex | LinearIndex:
    r = _Reader(data)
    h = _read_header(r)
    if text.n != h.n or text.sigma != h.sigma:
        raise ChecksumMismatch(f"text has n={text.n}, sigma={text.sigma}; index expects n={h.n}, sigma={h.sigma}")
    if text_checksum(text) != h.checksum:
        raise ChecksumMismatch("text checksum does not match the index")
    answer = _read_answer(r.section())
    if h.mode == "dense":
        ftr = _read_packed(r.section())
        sat = _read_packed(r.section())
        r.done()
        return DenseIndex(text, h.lam, answer, ftr, sat)
    layers = []
    for j in range(1, h.lam):
        s = r.section()
        if s.u64() != j:
            raise IndexFormatError(f"layer sections out of order at length {j}")
        bj, bp, sp, ep = (_read_bitvector(s) for _ in range(4))
        s.done()
        layers.append(LinearLayer(j, h.n, MonotoneMinima(j, bj), Rmq(bp=bp), FragmentLayer(j, h.n, sp, ep)))
    r.done()
    return LinearIndex(text, h.lam, answer, layers)


def load_index(path, text: Text) -> DenseIndex | LinearIndex:
    """Load an index written by :func:`save_index`; ``text`` must be the text it was built from."""
    return read_index(Path(path).read_bytes(), text)
