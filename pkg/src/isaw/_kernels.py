"""Sequential build loops compiled with numba."""
import numba
import numpy as np


@numba.njit(cache=True)
def kasai_lcp(s, sa0):
    n = s.size
    rank = np.empty(n, dtype=np.int64)
    for k in range(n):
        rank[sa0[k]] = k
    lcp = np.zeros(n, dtype=np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            p = sa0[r - 1]
            while i + h < n and p + h < n and s[i + h] == s[p + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


@numba.njit(cache=True)
def previous_occurrence(app, universe):
    """``pre[i]`` = 1-based position of the previous equal value, 0 if none."""
    last = np.zeros(universe + 1, dtype=np.int64)
    pre = np.empty(app.size, dtype=np.int64)
    for i in range(app.size):
        v = app[i]
        pre[i] = last[v]
        last[v] = i + 1
    return pre


@numba.njit(cache=True)
def cartesian_bp(values):
    """Balanced parentheses (1 = open) of the previous-smaller-or-equal tree.

    Node 0 is a virtual root; node i (1-based) hangs below the nearest
    ``k < i`` with ``values[k-1] <= values[i-1]``.
    """
    m = values.size
    bits = np.zeros(2 * (m + 1), dtype=np.uint8)
    stack = np.empty(m, dtype=np.int64)
    top = 0
    pos = 0
    bits[pos] = 1
    pos += 1
    prev_depth = 0
    for i in range(m):
        v = values[i]
        while top > 0 and values[stack[top - 1]] > v:
            top -= 1
        depth = top + 1
        pos += prev_depth - depth + 1
        bits[pos] = 1
        pos += 1
        stack[top] = i
        top += 1
        prev_depth = depth
    return bits


_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@numba.njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@numba.njit(cache=True, inline="always")
def _ones_before_word(sup, sub, w):
    return np.int64(sup[w >> 3]) + np.int64(sub[w])


@numba.njit(cache=True)
def bv_rank1(words, sup, sub, i):
    w = i >> 6
    r = _ones_before_word(sup, sub, w)
    rem = i & 63
    if rem:
        r += _popcount(words[w] & ((np.uint64(1) << np.uint64(rem)) - np.uint64(1)))
    return r


@numba.njit(cache=True)
def bv_select1(words, sup, sub, samples, k):
    """Position of the k-th 1-bit; ``samples[s]`` is the word of the (64 s + 1)-th one plus a final sentinel."""
    s = (k - 1) >> 6
    if k < 1 or s + 1 >= samples.size:
        raise IndexError("select_1 beyond the last 1-bit")
    lo = np.int64(samples[s])
    hi = np.int64(samples[s + 1])
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if _ones_before_word(sup, sub, mid) < k:
            lo = mid
        else:
            hi = mid - 1
    k -= _ones_before_word(sup, sub, lo)
    x = words[lo]
    if k > _popcount(x):
        raise IndexError("select_1 beyond the last 1-bit")
    for _ in range(k - 1):
        x &= x - np.uint64(1)
    off = 0
    while not (x >> np.uint64(off)) & np.uint64(1):
        off += 1
    return (lo << 6) + off + 1


@numba.njit(cache=True)
def _scan_bits(words, sup, sub, w, lo, hi, best, at):
    """Fold excess values of bits lo..hi (0-based, inclusive) of word w into (best, at)."""
    start = (w << 6) + lo
    e = 2 * bv_rank1(words, sup, sub, start) - start
    x = words[w] >> np.uint64(lo)
    for p in range(lo, hi + 1):
        if x & np.uint64(1):
            e += 1
        else:
            e -= 1
        if e <= best:
            best = e
            at = (w << 6) + p + 1
        x >>= np.uint64(1)
    return best, at


@numba.njit(cache=True)
def _full_words(sup, sub, wmin, wpos, w1, w2, best, at):
    for w in range(w1, w2 + 1):
        v = 2 * _ones_before_word(sup, sub, w) - (w << 6) + np.int64(wmin[w])
        if v <= best:
            best = v
            at = (w << 6) + np.int64(wpos[w]) + 1
    return best, at


@numba.njit(cache=True)
def rmq_min_excess(words, sup, sub, wmin, wpos, smin, spos, sparse, x, y):
    """(minimum excess, rightmost 1-based position) over BP positions x..y."""
    best = np.int64(1) << 40
    at = np.int64(0)
    wx = (x - 1) >> 6
    ox = (x - 1) & 63
    wy = (y - 1) >> 6
    oy = (y - 1) & 63
    if wx == wy:
        return _scan_bits(words, sup, sub, wx, ox, oy, best, at)
    best, at = _scan_bits(words, sup, sub, wx, ox, 63, best, at)
    first = wx + 1
    last = wy - 1
    if first <= last:
        s_first = (first + 7) >> 3
        s_last = ((last + 1) >> 3) - 1
        if s_first <= s_last:
            best, at = _full_words(sup, sub, wmin, wpos, first, s_first * 8 - 1, best, at)
            span = s_last - s_first + 1
            k = 0
            while (2 << k) <= span:
                k += 1
            a = sparse[k, s_first]
            b = sparse[k, s_last - (1 << k) + 1]
            s = b if smin[b] <= smin[a] else a
            if smin[s] <= best:
                best = np.int64(smin[s])
                at = np.int64(spos[s]) + 1
            best, at = _full_words(sup, sub, wmin, wpos, (s_last + 1) * 8, last, best, at)
        else:
            best, at = _full_words(sup, sub, wmin, wpos, first, last, best, at)
    return _scan_bits(words, sup, sub, wy, 0, oy, best, at)


@numba.njit(cache=True)
def rmq_argmin(words, sup, sub, samples, wmin, wpos, smin, spos, sparse, l, r):
    if l == r:
        return l
    x = bv_select1(words, sup, sub, samples, l + 1)
    y = bv_select1(words, sup, sub, samples, r + 1)
    best, at = rmq_min_excess(words, sup, sub, wmin, wpos, smin, spos, sparse, x, y)
    if best == 2 * (l + 1) - x:
        return l
    return bv_rank1(words, sup, sub, at + 1) - 1


@numba.njit(cache=True)
def stack_select1(words, sup, sub, samples, offs, layer, k):
    """select_1 on bit vector ``layer`` of a stack; ``offs[layer]`` / ``offs[layer + 1]`` bound its slices."""
    return bv_select1(
        words[offs[layer, 0]:offs[layer + 1, 0]],
        sup[offs[layer, 1]:offs[layer + 1, 1]],
        sub[offs[layer, 2]:offs[layer + 1, 2]],
        samples[offs[layer, 3]:offs[layer + 1, 3]],
        k,
    )


@numba.njit(cache=True)
def column_first_below(words, sup, sub, samples, offs, i, lo, hi, a):
    """Smallest j in [lo, hi] with ``select_1(i) - i < a`` on vector j - 1; hi + 1 if none.

    The values are non-increasing in j. The top is probed first.
    """
    if hi < lo or stack_select1(words, sup, sub, samples, offs, hi - 1, i) - i >= a:
        return hi + 1
    while lo < hi:
        mid = (lo + hi) >> 1
        if stack_select1(words, sup, sub, samples, offs, mid - 1, i) - i < a:
            hi = mid
        else:
            lo = mid + 1
    return lo


@numba.njit(cache=True)
def stack_rank1(words, sup, sub, offs, layer, i):
    return bv_rank1(
        words[offs[layer, 0]:offs[layer + 1, 0]],
        sup[offs[layer, 1]:offs[layer + 1, 1]],
        sub[offs[layer, 2]:offs[layer + 1, 2]],
        i,
    )


@numba.njit(cache=True)
def _first_end_from(words, sup, sub, samples, offs, w, j, a):
    # vectors w + j - 1 and 2 w + j - 1 mark fragment starts and ends
    sp = w + j - 1
    k = stack_rank1(words, sup, sub, offs, sp, a - 1) + 1
    if k > offs[sp, 4]:
        return 0
    return stack_select1(words, sup, sub, samples, offs, 2 * w + j - 1, k)


@numba.njit(cache=True)
def linear_query(words, sup, sub, samples, offs, w, t, window, a, b, b2):
    """Core of the linear-index query over a stack ``[B_1..B_w, SP_1..SP_w, EP_1..EP_w]``.

    Returns ``(kind, j, x)``: kind 0 is an answer of length j read at b with
    coverage start x, kind 1 a length-j fragment answer whose fragment ends
    at x (0 if none starts at or after a), kind 2 the global answer.
    """
    j = column_first_below(words, sup, sub, samples, offs, b, 1, t, a)
    if j <= t:
        return 0, j, stack_select1(words, sup, sub, samples, offs, j - 1, b) - b
    m = column_first_below(words, sup, sub, samples, offs, b2, t + 1, w, a)
    lo = max(t + 1, m - window)
    hi = m - 1
    # smallest length in [lo, hi] whose coverage fails, probing the top first
    if lo <= hi:
        e = _first_end_from(words, sup, sub, samples, offs, w, hi, a)
        if not 0 < e <= b:
            while lo < hi:
                mid = (lo + hi) >> 1
                e = _first_end_from(words, sup, sub, samples, offs, w, mid, a)
                if 0 < e <= b:
                    lo = mid + 1
                else:
                    hi = mid
            return 1, lo, _first_end_from(words, sup, sub, samples, offs, w, lo, a)
    if m <= w:
        return 0, m, stack_select1(words, sup, sub, samples, offs, m - 1, b) - b
    return 2, m, 0


@numba.njit(cache=True)
def pack_fixed(values, width):
    """Pack non-negative integers into ``width``-bit little-endian fields of uint64 words."""
    nbits = values.size * width
    words = np.zeros((nbits + 63) >> 6, dtype=np.uint64)
    uw = np.uint64(width)
    for k in range(values.size):
        v = np.uint64(values[k])
        bit = k * width
        w = bit >> 6
        off = np.uint64(bit & 63)
        words[w] |= v << off
        if (bit & 63) + width > 64:
            words[w + 1] |= v >> (np.uint64(64) - off)
    return words


@numba.njit(cache=True)
def unpack_fixed(words, width, size):
    out = np.empty(size, dtype=np.uint64)
    mask = (np.uint64(1) << np.uint64(width)) - np.uint64(1) if width < 64 else ~np.uint64(0)
    for k in range(size):
        bit = k * width
        w = bit >> 6
        off = np.uint64(bit & 63)
        x = words[w] >> off
        if (bit & 63) + width > 64:
            x |= words[w + 1] << (np.uint64(64) - off)
        out[k] = x & mask
    return out


@numba.njit(cache=True, inline="always")
def _packed_get(words, width, k):
    bit = k * width
    w = bit >> 6
    off = np.uint64(bit & 63)
    x = words[w] >> off
    if (bit & 63) + width > 64:
        x |= words[w + 1] << (np.uint64(64) - off)
    return np.int64(x & ((np.uint64(1) << np.uint64(width)) - np.uint64(1)))


@numba.njit(cache=True)
def dense_query(ftr, ftr_width, sat, sat_width, w, a, b):
    """Smallest j with ``ftr[b, j] < a`` (non-increasing in j), its value and satellite; ``(w + 1, 0, 0)`` if none."""
    base = (b - 1) * w - 1
    if _packed_get(ftr, ftr_width, base + w) >= a:
        return w + 1, 0, 0
    lo = 1
    hi = w
    while lo < hi:
        mid = (lo + hi) >> 1
        if _packed_get(ftr, ftr_width, base + mid) < a:
            hi = mid
        else:
            lo = mid + 1
    return lo, _packed_get(ftr, ftr_width, base + lo), _packed_get(sat, sat_width, base + lo)


FNV_OFFSET = np.uint64(0xCBF29CE484222325)
FNV_PRIME = np.uint64(0x100000001B3)


@numba.njit(cache=True)
def fnv1a64(data):
    h = FNV_OFFSET
    for k in range(data.size):
        h ^= np.uint64(data[k])
        h *= FNV_PRIME
    return h
