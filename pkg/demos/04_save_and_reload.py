"""Write an index to disk, load it back and check it still answers the same way."""
import tempfile
from pathlib import Path

import numpy as np

from isaw import build_linear, build_text, load_index, save_index

words = "the quick brown fox jumps over the lazy dog".split()
rng = np.random.default_rng(7)
tokens = [words[i] for i in rng.integers(0, len(words), 5000)]
text = build_text(tokens)
print("tokens:", text.n, "distinct:", text.sigma, "shortest absent length:", text.ell)

idx = build_linear(text)
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "words.isaw"
    size = save_index(idx, path)
    print("index file:", size, "bytes")
    back = load_index(path, text)

same = 0
for _ in range(1000):
    a, b = sorted(rng.integers(1, text.n + 1, 2).tolist())
    same += idx.query(a, b) == back.query(a, b)
print("identical answers after reload:", same, "of 1000")

ans = back.query(1, 40)
print("shortest word missing from the first 40 tokens:", " ".join(text.decode_word(ans.word(text))))
