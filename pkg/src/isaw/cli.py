"""``isaw`` command line: build, query, verify, bench.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import math
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .dense import build_dense
from .errors import IsawError, RangeOutOfBounds
from .index_file import load_index, read_header, save_index
from .linear import build_linear
from .oracle import MAX_WINDOW, check_extension_bounds, iter_range_oracle, oracle_saw, word_code
from .text import Extension, SawAnswer, Text, build_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TOKEN_FORMATS = ("bytes", "u32le", "ascii-lines")
REFERENCE_TEXT = "abaabaaabbabbbaaab"
BUILDERS = {"dense": build_dense, "linear": build_linear}


class UsageError(Exception):
    pass


def parse_tokens(data: bytes, token_format: str):
    if token_format == "bytes":
        return data
    if token_format == "u32le":
        if len(data) % 4:
            raise UsageError(f"u32le input has {len(data)} bytes, not a multiple of 4")
        return np.frombuffer(data, dtype="<u4").astype(np.int64)
    if token_format == "ascii-lines":
        try:
            return data.decode("ascii").splitlines()
        except UnicodeDecodeError as e:
            raise UsageError(f"ascii-lines input is not ASCII: {e}") from None
    raise UsageError(f"unknown token format {token_format!r}")


def read_text(path, token_format: str, sigma: int | None = None) -> Text:
    return build_text(parse_tokens(Path(path).read_bytes(), token_format), sigma)


def render_token(text: Text, code: int, token_format: str) -> str:
    tok = text.decode(code)
    if isinstance(tok, str) and token_format != "ascii-lines":
        return tok  # '#code' for a letter that never occurs
    if token_format == "bytes":
        ch = chr(tok)
        return ch if ch.isprintable() and not ch.isspace() else f"\\x{tok:02x}"
    return str(tok)


def render_word(text: Text, codes, token_format: str) -> str:
    parts = [render_token(text, c, token_format) for c in codes]
    return "".join(parts) if token_format == "bytes" else " ".join(parts)


def format_answer(text: Text, a: int, b: int, ans: SawAnswer, token_format: str, print_word: bool) -> str:
    w = ans.witness
    alpha = render_token(text, w.alpha, token_format) if isinstance(w, Extension) else "-"
    fields = [a, b, ans.length, w.i, w.j, alpha]
    if print_word:
        fields.append(render_word(text, ans.word(text), token_format))
    return "\t".join(map(str, fields))


# build


def cmd_build(args) -> int:
    text = read_text(args.input, args.token_format, args.sigma)
    t0 = time.perf_counter()
    idx = BUILDERS[args.mode](text)
    elapsed = time.perf_counter() - t0
    file_bytes = save_index(idx, args.output, args.token_format)
    print(
        f"mode={args.mode} n={text.n} sigma={text.sigma} lambda={idx.lam} build_s={elapsed:.4f} "
        f"bytes={idx.nbytes} file_bytes={file_bytes} bytes_per_char={idx.nbytes / text.n:.4f}",
        file=sys.stderr,
    )
    return EXIT_OK


# query


def _read_ranges(args) -> list[tuple[int, str]]:
    """``(line number, raw line)`` pairs; inline ranges count as line 1."""
    if args.range is not None:
        return [(1, f"{args.range[0]} {args.range[1]}")]
    source = sys.stdin if args.batch == "-" else open(args.batch, encoding="ascii")
    with source:
        return [(k, line) for k, line in enumerate(source, start=1) if line.strip()]


def cmd_query(args) -> int:
    header = read_header(args.index)
    if header.token_format not in TOKEN_FORMATS:
        raise UsageError("index records no file token format; it was saved from the library, not `isaw build`")
    text = read_text(args.text, header.token_format, header.sigma)
    idx = load_index(args.index, text)
    fmt = header.token_format

    def answer(item) -> tuple[bool, str]:
        lineno, line = item
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError(f"expected two integers, got {line.strip()!r}")
            a, b = int(parts[0]), int(parts[1])
            return True, format_answer(text, a, b, idx.query(a, b), fmt, args.print_word)
        except (ValueError, RangeOutOfBounds) as e:
            return False, f"line {lineno}: {e}"

    items = _read_ranges(args)
    if args.workers > 1:
        with ThreadPoolExecutor(args.workers) as pool:
            results = list(pool.map(answer, items, chunksize=256))  # map keeps input order
    else:
        results = [answer(item) for item in items]
    ok = True
    out = sys.stdout
    for good, line in results:
        if good:
            out.write(line + "\n")
        else:
            ok = False
            print(line, file=sys.stderr)
    return EXIT_OK if ok else EXIT_USAGE


# verify


def _check_range(idx_by_mode, text: Text, a: int, b: int, lam: int, grams) -> str | None:
    """None if every path answers [a, b] correctly, else a description of the first problem."""
    sigma = text.sigma
    for name, query in idx_by_mode:
        try:
            ans = query(a, b)
        except Exception as e:  # a corrupted index may fail in any way
            return f"{name}: {type(e).__name__}: {e}"
        if ans.length != lam:
            return f"{name}: length {ans.length}, oracle says {lam}"
        try:
            word = ans.word(text)
        except (AssertionError, IndexError) as e:
            return f"{name}: bad witness {ans.witness}: {e}"
        present = grams.get(lam) if isinstance(grams, dict) else (grams[lam] if lam < len(grams) else None)
        if present is not None and word_code(word, sigma) in present:
            return f"{name}: witness {word} occurs in the range"
    return None


def _paths(text: Text, fault: bool):
    dense, linear = build_dense(text), build_linear(text)
    if fault and linear.layers:
        # corrupt the middle bit of the length-1 unary vector
        linear.flip_bj_bit(1, (linear.layers[0].minima.bj.length + 1) // 2)
    return [("dense", dense.query), ("linear", linear.query), ("loglog", linear.query_loglog)]


def verify_text(text: Text, n_max: int, rng, samples: int = 2000, fault: bool = False):
    """First failing ``(a, b, reason)`` (shortest range, then leftmost) or None."""
    paths = _paths(text, fault)
    failures = []
    if text.n <= n_max:
        for a, b, lam, grams in iter_range_oracle(text.tokens.tolist(), text.sigma):
            reason = _check_range(paths, text, a, b, lam, grams)
            if reason:
                failures.append((b - a, a, b, reason))
    else:
        for _ in range(samples):
            length = min(text.n, MAX_WINDOW, int(2 ** rng.uniform(0, math.log2(min(text.n, MAX_WINDOW)))))
            a = int(rng.integers(1, text.n - length + 2))
            b = a + length - 1
            res = oracle_saw(text, a, b)
            reason = _check_range(paths, text, a, b, res.length, res.all_words)
            if reason:
                failures.append((b - a, a, b, reason))
    if not failures:
        return None
    _, a, b, reason = min(failures)
    return a, b, reason


def _describe(text: Text) -> str:
    codes = text.tokens.tolist()
    if text.sigma <= 26:
        return "".join(chr(ord("a") + c - 1) for c in codes)
    return " ".join(map(str, codes))


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    cases = [("reference", build_text(REFERENCE_TEXT))]
    if args.input:
        cases.append((str(args.input), read_text(args.input, args.token_format, args.sigma)))
    for k in range(args.trials):
        n = int(rng.integers(1, args.n_max + 1))
        sigma = int(rng.integers(2, 6))
        cases.append((f"random #{k + 1}", Text.from_codes(rng.integers(1, sigma + 1, n), sigma)))
    failed = 0
    for name, text in cases:
        hit = verify_text(text, args.n_max, rng, fault=args.inject_fault)
        if hit:
            a, b, reason = hit
            failed += 1
            print(f"FAIL {name} n={text.n} sigma={text.sigma} text={_describe(text)} a={a} b={b}: {reason}")
            break
    pairs = 0
    if not failed:
        for _ in range(args.trials):
            sigma = int(rng.integers(2, 5))
            x = rng.integers(1, sigma + 1, int(rng.integers(1, args.n_max + 1))).tolist()
            y = rng.integers(1, sigma + 1, int(rng.integers(0, args.n_max + 1))).tolist()
            try:
                check_extension_bounds(x, y, sigma)
            except IsawError as e:
                failed += 1
                print(f"FAIL extension bounds sigma={sigma} x={x} y={y}: {e}")
                break
            pairs += 1
    status = "FAIL" if failed else "PASS"
    print(f"{status} texts={len(cases)} extension_pairs={pairs} seed={args.seed}")
    return EXIT_FAIL if failed else EXIT_OK


# bench

BENCH_HEADER = "mode\tn\tsigma\tlambda\tbytes_per_char\tqueries\tmedian_ns\tp99_ns"


def _bench_prefix_lengths(n: int) -> list[int]:
    lengths = [1 << k for k in range(4, n.bit_length()) if (1 << k) < n]
    return lengths + [n]


def cmd_bench(args) -> int:
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    unknown = [m for m in modes if m not in ("dense", "linear", "loglog")]
    if unknown:
        raise UsageError(f"unknown modes {unknown}")
    print(BENCH_HEADER)
    if args.query_count == 0:
        return EXIT_OK
    full = read_text(args.input, args.token_format, args.sigma)
    rng = np.random.default_rng(args.seed)
    for n in _bench_prefix_lengths(full.n):
        text = Text(full.tokens[:n], full.sigma, full.alphabet)
        lengths = np.minimum(n, 2 ** rng.uniform(0, math.log2(n), args.query_count)).astype(np.int64)
        starts = (rng.random(args.query_count) * (n - lengths + 1)).astype(np.int64) + 1
        queries = list(zip(starts.tolist(), (starts + lengths - 1).tolist()))
        built = {}
        for mode in modes:
            kind = "linear" if mode == "loglog" else mode
            if kind not in built:
                built[kind] = BUILDERS[kind](text)
            idx = built[kind]
            query = idx.query_loglog if mode == "loglog" else idx.query
            times = []
            for a, b in queries:
                t0 = time.perf_counter_ns()
                query(a, b)
                times.append(time.perf_counter_ns() - t0)
            p99 = float(np.percentile(times, 99))
            print(
                f"{mode}\t{n}\t{text.sigma}\t{idx.lam}\t{idx.nbytes / n:.4f}\t{len(times)}\t"
                f"{statistics.median(times):.0f}\t{p99:.0f}"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isaw", description="Shortest absent word queries on text ranges.")
    sub = parser.add_subparsers(dest="command", required=True)

    def text_options(p):
        p.add_argument("--sigma", type=int, default=None, help="alphabet size (default: distinct tokens)")
        p.add_argument("--token-format", choices=TOKEN_FORMATS, default="bytes")

    p = sub.add_parser("build", help="build an index and write it to disk")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--mode", choices=sorted(BUILDERS), default="linear")
    text_options(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="answer range queries as TSV: a b len i j alpha [word]")
    p.add_argument("index")
    p.add_argument("text", help="the text the index was built from")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    group.add_argument("--batch", metavar="FILE", help="file of 'a b' lines, '-' for stdin")
    p.add_argument("--print-word", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("verify", help="compare every query path against brute force")
    p.add_argument("--input", default=None, help="also verify this text")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--inject-fault", action="store_true", help="corrupt one unary-vector bit (negative control)")
    text_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="latency and space over power-of-two prefixes (TSV)")
    p.add_argument("input")
    p.add_argument("--modes", default="dense,linear,loglog")
    p.add_argument("--query-count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    text_options(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1 or getattr(args, "n_max", 1) < 1 or getattr(args, "trials", 0) < 0:
        parser.error("counts must be positive")
    if getattr(args, "query_count", 0) < 0:
        parser.error("--query-count must be non-negative")
    try:
        return args.func(args)
    except (OSError, UsageError, IsawError) as e:
        print(f"isaw: {e}", file=sys.stderr)
        return EXIT_USAGE
