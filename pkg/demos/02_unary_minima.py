"""How one coverage row fits in about 2n bits.

For a fixed length j, the coverage start of position i never decreases as
i grows. A non-decreasing sequence v_1..v_n is stored as a bit vector with
its i-th one at i + v_i, and select recovers each value.
"""
import numpy as np

from isaw import build_text, rank_substrings
from isaw.linear import MonotoneMinima
from isaw.occurrences import ftr_row, previous_links

text = build_text("abaabaaabbabbbaaab")
j = 2
ranks = rank_substrings(text, j).ranks
app, pre = previous_links(ranks, text.sigma ** j)
values, _ = ftr_row(pre, j, text.n)
print("coverage starts for j=2:", values.tolist())

mm = MonotoneMinima.encode(j, values)
print("unary vector:           ", mm.bj.to_string())
print("decoded back:           ", mm.decode().tolist())
print("bits used:", len(mm.bj), "for", text.n, "values")

# the same encoding on a long random text
rng = np.random.default_rng(0)
big = build_text(rng.integers(0, 2, 200_000).tolist())
ranks = rank_substrings(big, 8).ranks
_, pre = previous_links(ranks, 2 ** 8)
values, _ = ftr_row(pre, 8, big.n)
mm = MonotoneMinima.encode(8, values)
print(f"n = {big.n}: {len(mm.bj)} bits, {len(mm.bj) / big.n:.2f} bits per value")
assert np.array_equal(mm.decode(), values)
