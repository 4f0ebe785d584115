"""Compiled range-minimum query over the packed BP words.

The kernels read the same buffers that :class:`RankSelectBits` and
:class:`ParenSupport` already hold (zero-copy numpy views), so no space is
added.  Layout parameters are passed in; the caller checks they match the
defaults these routines assume (64-bit words, 2**16-bit superblocks).
"""

import numpy as np
from numba import njit

from .bitvec import SELECT_SAMPLE

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _rank1(words, sup, blk, lg_block, lg_per_super, i):
    b = i >> lg_block
    r = np.int64(sup[b >> lg_per_super]) + np.int64(blk[b])
    w = (b << lg_block) >> 6
    last = i >> 6
    while w < last:
        r += _popcount(words[w])
        w += 1
    off = i & 63
    x = words[last]
    if off != 63:
        x &= (np.uint64(1) << np.uint64(off + 1)) - np.uint64(1)
    return r + _popcount(x)


@njit(cache=True)
def _select1(words, sup, blk, samp, lg_block, lg_per_super, n_blocks, j):
    s = (j - 1) // SELECT_SAMPLE
    lo = np.int64(samp[s])
    hi = np.int64(samp[s + 1]) if s + 1 < samp.size else n_blocks - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if np.int64(sup[mid >> lg_per_super]) + np.int64(blk[mid]) < j:
            lo = mid
        else:
            hi = mid - 1
    r = j - (np.int64(sup[lo >> lg_per_super]) + np.int64(blk[lo]))
    w = (lo << lg_block) >> 6
    while True:
        c = _popcount(words[w])
        if r <= c:
            break
        r -= c
        w += 1
    x = words[w]
    k = 0
    while True:
        if (x >> np.uint64(k)) & np.uint64(1):
            r -= 1
            if r == 0:
                return (w << 6) + k
        k += 1


@njit(cache=True)
def _scan_back(words, p, start, e, best, at):
    # walk p down to start; e is excess(p); keep strictly smaller minima
    while p >= start:
        if e < best:
            best = e
            at = p
        if (words[p >> 6] >> np.uint64(p & 63)) & np.uint64(1):
            e -= 1
        else:
            e += 1
        p -= 1
    return best, at


@njit(cache=True)
def _rightmost_min(words, sup, blk, lg_block, lg_per_super, mins0, mins1,
                   pblock, arity, l, r):
    """Rightmost position of minimum excess in [l, r]."""
    bl = l // pblock
    br = r // pblock
    e = 2 * _rank1(words, sup, blk, lg_block, lg_per_super, r) - r - 1
    lo = max(l, br * pblock)
    best, at = _scan_back(words, r, lo, e, np.int64(1) << 62, r)
    if bl == br:
        return at
    # whole blocks strictly between, right to left
    bb = br - 1
    hit = -1
    hit_group = False
    while bb > bl:
        if (mins1.size > 0 and bb % arity == arity - 1
                and bb - (arity - 1) > bl):
            g = bb // arity
            if mins1[g] < best:
                best = mins1[g]
                hit = g
                hit_group = True
            bb -= arity
        else:
            if mins0[bb] < best:
                best = mins0[bb]
                hit = bb
                hit_group = False
            bb -= 1
    if hit >= 0:
        if hit_group:
            c = hit * arity + arity - 1
            while mins0[c] != best:
                c -= 1
            hit = c
        end = (hit + 1) * pblock - 1
        e = 2 * _rank1(words, sup, blk, lg_block, lg_per_super, end) - end - 1
        p = end
        while e != best:
            if (words[p >> 6] >> np.uint64(p & 63)) & np.uint64(1):
                e -= 1
            else:
                e += 1
            p -= 1
        at = p
    end = (bl + 1) * pblock - 1
    e = 2 * _rank1(words, sup, blk, lg_block, lg_per_super, end) - end - 1
    best, at = _scan_back(words, end, l, e, best, at)
    return at


@njit(cache=True)
def rmq_kernel(words, sup, blk, samp, lg_block, lg_per_super, n_blocks,
               mins0, mins1, pblock, arity, i, j):
    if i == j:
        return i
    x = _select1(words, sup, blk, samp, lg_block, lg_per_super, n_blocks, i + 1)
    y = _select1(words, sup, blk, samp, lg_block, lg_per_super, n_blocks, j + 1)
    m = _rightmost_min(words, sup, blk, lg_block, lg_per_super, mins0, mins1,
                       pblock, arity, x - 1, y)
    return _rank1(words, sup, blk, lg_block, lg_per_super, m + 1) - 1


@njit(cache=True)
def rmq_batch(words, sup, blk, samp, lg_block, lg_per_super, n_blocks,
              mins0, mins1, pblock, arity, ii, jj):
    out = np.empty(ii.size, np.int64)
    for k in range(ii.size):
        out[k] = rmq_kernel(words, sup, blk, samp, lg_block, lg_per_super,
                            n_blocks, mins0, mins1, pblock, arity, ii[k], jj[k])
    return out


@njit(cache=True)
def stream_kernel(a, out, b, dir_words, tail_words):
    """Compiled twin of ``StreamState.run`` writing 0/1 bytes into ``out``.

    Returns ``(peak words, positions scanned)``; the peak excludes the fixed
    counters.  The tail and the directory live in arrays of about ``b`` and
    ``len(out) / b`` entries, allocated here.
    """
    n = a.size
    size = out.size
    t_pos = np.empty(b + 1, np.int64)
    t_rank = np.empty(b + 1, np.int64)
    n_dir = size // b + 2
    d_blk = np.empty(n_dir, np.int64)
    d_ob = np.empty(n_dir, np.int64)
    d_p = np.empty(n_dir, np.int64)
    d_cb = np.empty(n_dir, np.int64)
    nt = 0
    nd = 0
    peak = 0
    scanned = 0

    out[0] = 1
    t_pos[0] = 0
    t_rank[0] = 1
    nt = 1
    opens = 1
    pos = 1
    top = 1
    blk = 0
    blk_end = b
    blk_opens = 0
    k = 0
    for i in range(n):
        x = a[i]
        while k > 0 and a[top - 2] > x:
            if pos >= blk_end:
                if nt > 0:
                    d_blk[nd] = blk
                    d_ob[nd] = blk_opens
                    d_p[nd] = t_pos[nt - 1]
                    d_cb[nd] = t_rank[nt - 1] - 1 - blk_opens
                    nd += 1
                    nt = 0
                blk = pos // b
                blk_end = pos + b
                blk_opens = opens
            out[pos] = 0
            pos += 1
            k -= 1
            if nt > 0:
                nt -= 1
                if nt > 0:
                    top = t_rank[nt - 1]
                else:
                    top = d_ob[nd - 1] + d_cb[nd - 1] + 1
                continue
            e = nd - 1
            q = d_p[e] - 1
            start = d_blk[e] * b
            depth = 0
            seen = 0
            while q >= start:
                if out[q]:
                    seen += 1
                    if depth == 0:
                        break
                    depth -= 1
                else:
                    depth += 1
                q -= 1
            scanned += d_p[e] - q
            if q >= start:
                d_p[e] = q
                d_cb[e] -= seen
            else:
                nd -= 1
                e -= 1
            top = d_ob[e] + d_cb[e] + 1
        if pos >= blk_end:
            if nt > 0:
                d_blk[nd] = blk
                d_ob[nd] = blk_opens
                d_p[nd] = t_pos[nt - 1]
                d_cb[nd] = t_rank[nt - 1] - 1 - blk_opens
                nd += 1
                nt = 0
            blk = pos // b
            blk_end = pos + b
            blk_opens = opens
        out[pos] = 1
        opens += 1
        t_pos[nt] = pos
        t_rank[nt] = opens
        nt += 1
        top = opens
        pos += 1
        k += 1
        w = dir_words * nd + tail_words * nt
        if w > peak:
            peak = w
    for p in range(pos, size):
        out[p] = 0
    return peak, scanned
