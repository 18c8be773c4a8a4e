"""Query time and space as the text grows.

Latency should stay flat in both the text length and the range length,
and the linear index should grow like n log n bits.
"""
import statistics
import time

import numpy as np

from isaw import Text, build_dense, build_linear

rng = np.random.default_rng(1)

for e in (12, 14, 16, 18):
    n = 1 << e
    text = Text.from_codes(rng.integers(1, 3, n), 2)
    t = time.perf_counter()
    idx = build_linear(text)
    build_s = time.perf_counter() - t
    dense_bytes = build_dense(text).nbytes if e <= 16 else float("nan")

    starts = rng.integers(1, n // 2, 2000)
    times = []
    for a in starts.tolist():
        b = a + int(rng.integers(16, n // 2))
        t = time.perf_counter_ns()
        idx.query(a, min(b, n))
        times.append(time.perf_counter_ns() - t)
    print(
        f"n=2^{e:<2d} lambda={idx.lam:2d} build {build_s:5.2f}s  "
        f"linear {idx.nbytes / n:5.1f} B/char ({idx.nbytes * 8 / (n * e):.2f} x n log n bits)  "
        f"dense {dense_bytes / n:5.1f} B/char  median query {statistics.median(times) / 1000:.1f} us"
    )
