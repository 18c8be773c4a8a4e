"""A first look: build both indexes on a small text and ask a few questions."""
from isaw import build_dense, build_linear, build_text, oracle_saw

text = build_text("abaabaaabbabbbaaab")
print("text:", "".join(text.decode_word(text.tokens.tolist())), "n =", text.n, "sigma =", text.sigma)

# every word of length 3 occurs somewhere, so the whole text needs length 4
print("shortest absent length of the whole text:", text.ell)

dense = build_dense(text)
linear = build_linear(text)

for a, b in [(8, 14), (3, 14), (5, 14), (7, 9), (2, 7)]:
    ans = linear.query(a, b)
    word = "".join(text.decode_word(ans.word(text)))
    window = "".join(text.decode_word(text.tokens[a - 1:b].tolist()))
    truth = oracle_saw(text, a, b).length
    print(f"[{a:2d},{b:2d}] {window:<14} -> {word!r:7} length {ans.length} (brute force {truth}, dense {dense.query(a, b).length})")
