"""Shortest absent word queries on ranges of a fixed text.

Build an index once, then ask for a shortest word over the alphabet that
does not occur in ``T[a..b]`` (1-based, inclusive)::

    >>> from isaw import build_text, build_linear
    >>> idx = build_linear(build_text("abaabaaabbabbbaaab"))
    >>> ans = idx.query(8, 14)
    >>> ans.length, "".join(idx.text.decode_word(ans.word(idx.text)))
    (2, 'aa')
"""
from .dense import DenseIndex, build_dense, query_dense
from .errors import (
    BoundViolated,
    ChecksumMismatch,
    EmptyInput,
    IndexFormatError,
    IndexOutOfRange,
    InternalInvariantViolation,
    IsawError,
    LayerBeyondEll,
    LengthOutOfRange,
    NotFound,
    RangeOutOfBounds,
    SigmaTooSmall,
    UnaryAlphabet,
    WindowTooLarge,
)
from .fragments import FragmentLayer, build_fragments
from .index_file import load_index, save_index
from .linear import LinearIndex, build_linear, ftr_access, query_linear, query_loglog
from .occurrences import OccLayer, build_occ
from .oracle import check_context_cover, check_extension_bounds, oracle_saw, period
from .succinct import BitVector, PackedArray, Rmq
from .text import Extension, SawAnswer, Substring, Text, build_text, global_saw, rank_substrings, substring_complexity

__version__ = "0.1.0"

__all__ = [
    "BitVector", "BoundViolated", "ChecksumMismatch", "DenseIndex", "EmptyInput", "Extension",
    "FragmentLayer", "IndexFormatError", "IndexOutOfRange", "InternalInvariantViolation", "IsawError",
    "LayerBeyondEll", "LengthOutOfRange", "LinearIndex", "NotFound", "OccLayer", "PackedArray",
    "RangeOutOfBounds", "Rmq", "SawAnswer", "SigmaTooSmall", "Substring", "Text", "UnaryAlphabet",
    "WindowTooLarge", "build_dense", "build_fragments", "build_linear", "build_occ", "build_text",
    "check_context_cover", "check_extension_bounds", "ftr_access", "global_saw", "load_index",
    "oracle_saw", "period", "query_dense", "query_linear", "query_loglog", "rank_substrings",
    "save_index", "substring_complexity",
]
