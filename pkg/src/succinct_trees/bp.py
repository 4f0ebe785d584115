"""Balanced parentheses with excess, matching and excess-search support.

The sequence is held in a :class:`RankSelectBits` (1 is ``(``).  On top of it
sits a range min-max tree: blocks of ``block`` positions record the minimum
and maximum absolute excess reached inside them, and groups of ``arity``
consecutive records are summarised again until a single root remains.
Inside a block, 16-bit chunks are skipped with lookup tables.

``excess(i)`` is the number of opens minus closes in ``[0, i]``.  Because
excess moves by exactly one per position, the set of excess values inside
any range is an integer interval, so "does this range reach value d?" is
answered by ``min <= d <= max``.  All searches below rely on that.
"""

import array
import sys

import numpy as np

from .bitvec import RankSelectBits, as_bit_array
from .errors import InvalidNodeError, MalformedEncodingError


def _chunk_tables():
    v = np.arange(1 << 16, dtype=np.int64)
    steps = ((v[:, None] >> np.arange(16)) & 1) * 2 - 1
    pref = np.cumsum(steps, axis=1)
    return (pref.min(axis=1).tolist(), pref.max(axis=1).tolist(),
            pref[:, -1].tolist(), pref.argmin(axis=1).tolist())


_MIN16, _MAX16, _DELTA16, _ARGMIN16 = _chunk_tables()


def parens_to_string(bits):
    """Render a 0/1 array (or anything :func:`as_bit_array` takes) as ``()``."""
    arr = as_bit_array(bits)
    return arr.tobytes().translate(bytes.maketrans(b"\x00\x01", b")(")).decode("ascii")


def check_balanced(bits):
    """Raise :class:`MalformedEncodingError` unless ``bits`` is balanced."""
    arr = as_bit_array(bits)
    exc = np.cumsum(arr.astype(np.int64) * 2 - 1)
    neg = np.flatnonzero(exc < 0)
    if neg.size:
        raise MalformedEncodingError(
            f"prefix ending at {neg[0]} closes more than it opens", int(neg[0]))
    if exc.size and exc[-1] != 0:
        raise MalformedEncodingError(
            f"{exc[-1]} parentheses left open at end", int(exc.size))
    return exc


class ParenSupport:
    """Static balanced parenthesis sequence.

    Parameters
    ----------
    parens : str or array-like
        ``"(()())"`` style text or a 0/1 sequence with 1 meaning ``(``.
    block : int
        Positions per leaf of the min-max tree; multiple of 16.
    arity : int
        Branching factor of the min-max tree.
    """

    def __init__(self, parens, block=512, arity=32):
        if block < 16 or block % 16:
            raise ValueError("block must be a positive multiple of 16")
        if arity < 2:
            raise ValueError("arity must be at least 2")
        arr = as_bit_array(parens)
        exc = check_balanced(arr)
        self.bits = RankSelectBits(arr)
        self._build(exc, block, arity)

    @classmethod
    def from_bits(cls, bits, block=512, arity=32):
        """Wrap an existing :class:`RankSelectBits` without repacking."""
        obj = cls.__new__(cls)
        exc = check_balanced(bits.to_numpy())
        obj.bits = bits
        obj._build(exc, block, arity)
        return obj

    def _build(self, exc, block, arity):
        n = len(self.bits)
        self._n = n
        self._block = block
        self._arity = arity
        data = self.bits.data
        if sys.byteorder == "little":
            self._w16 = memoryview(data).cast("H")
        else:
            w = array.array("H", data)
            w.byteswap()
            self._w16 = w
        self._data = data

        mins, maxs = [], []
        if n:
            starts = np.arange(0, n, block)
            lo = np.minimum.reduceat(exc, starts)
            hi = np.maximum.reduceat(exc, starts)
            while True:
                mins.append(array.array("i", lo.astype(np.int32).tobytes()))
                maxs.append(array.array("i", hi.astype(np.int32).tobytes()))
                if lo.size <= 1:
                    break
                starts = np.arange(0, lo.size, arity)
                lo = np.minimum.reduceat(lo, starts)
                hi = np.maximum.reduceat(hi, starts)
        self._mins = mins
        self._maxs = maxs

    # -- plain accessors ---------------------------------------------------

    def __len__(self):
        return self._n

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        if self._n <= 64:
            return f"ParenSupport('{self.to_string()}')"
        return f"ParenSupport(<{self._n} parentheses>)"

    def __eq__(self, other):
        if not isinstance(other, ParenSupport):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def to_string(self):
        return parens_to_string(self.bits.to_numpy())

    def index_bits(self):
        """Bits used by rank/select directory plus the min-max tree."""
        tree = sum(8 * a.itemsize * len(a) for a in self._mins + self._maxs)
        return self.bits.index_bits() + tree

    def _check(self, i):
        if not 0 <= i < self._n:
            raise IndexError(f"position {i} out of range [0, {self._n})")

    def is_open(self, i):
        self._check(i)
        return self._data[i >> 3] >> (i & 7) & 1 == 1

    def _excess(self, i):
        return 2 * self.bits._rank1(i) - i - 1

    def excess(self, i):
        self._check(i)
        return self._excess(i)

    # -- chunk scans -------------------------------------------------------
    #
    # e is the excess *before* position p for forward scans and the excess
    # *at* position p for backward scans.

    def _scan_fwd(self, p, end, e, d):
        """First q in [p, end) with excess(q) == d, or None."""
        data = self._data
        while p < end and p & 15:
            e += 1 if data[p >> 3] >> (p & 7) & 1 else -1
            if e == d:
                return p
            p += 1
        w16 = self._w16
        while p + 16 <= end:
            v = w16[p >> 4]
            if e + _MIN16[v] <= d <= e + _MAX16[v]:
                for k in range(16):
                    e += 1 if v >> k & 1 else -1
                    if e == d:
                        return p + k
            e += _DELTA16[v]
            p += 16
        while p < end:
            e += 1 if data[p >> 3] >> (p & 7) & 1 else -1
            if e == d:
                return p
            p += 1
        return None

    def _scan_bwd(self, p, start, e, d):
        """Largest q in [start, p] with excess(q) == d, or None."""
        data = self._data
        while p >= start and (p + 1) & 15:
            if e == d:
                return p
            e -= 1 if data[p >> 3] >> (p & 7) & 1 else -1
            p -= 1
        w16 = self._w16
        while p - 15 >= start:
            v = w16[p >> 4]
            eb = e - _DELTA16[v]
            if eb + _MIN16[v] <= d <= eb + _MAX16[v]:
                for k in range(15, -1, -1):
                    if e == d:
                        return p - 15 + k
                    e -= 1 if v >> k & 1 else -1
            e = eb
            p -= 16
        while p >= start:
            if e == d:
                return p
            e -= 1 if data[p >> 3] >> (p & 7) & 1 else -1
            p -= 1
        return None

    def _scan_min(self, p, end, e):
        """Leftmost minimum of excess over [p, end); e is excess before p."""
        data = self._data
        best, at = None, p
        while p < end and p & 15:
            e += 1 if data[p >> 3] >> (p & 7) & 1 else -1
            if best is None or e < best:
                best, at = e, p
            p += 1
        w16 = self._w16
        while p + 16 <= end:
            v = w16[p >> 4]
            m = e + _MIN16[v]
            if best is None or m < best:
                best, at = m, p + _ARGMIN16[v]
            e += _DELTA16[v]
            p += 16
        while p < end:
            e += 1 if data[p >> 3] >> (p & 7) & 1 else -1
            if best is None or e < best:
                best, at = e, p
            p += 1
        return best, at

    # -- min-max tree navigation -------------------------------------------

    def _next_node(self, blk, d):
        """First block after ``blk`` whose excess range contains d."""
        k = self._arity
        idx = blk
        for lvl in range(len(self._mins)):
            mins, maxs = self._mins[lvl], self._maxs[lvl]
            end = min((idx // k + 1) * k, len(mins))
            for j in range(idx + 1, end):
                if mins[j] <= d <= maxs[j]:
                    return self._descend(lvl, j, d, leftmost=True)
            idx //= k
        return None

    def _prev_node(self, blk, d):
        """Last block before ``blk`` whose excess range contains d."""
        k = self._arity
        idx = blk
        for lvl in range(len(self._mins)):
            mins, maxs = self._mins[lvl], self._maxs[lvl]
            for j in range(idx - 1, (idx // k) * k - 1, -1):
                if mins[j] <= d <= maxs[j]:
                    return self._descend(lvl, j, d, leftmost=False)
            idx //= k
        return None

    def _descend(self, lvl, j, d, leftmost):
        k = self._arity
        while lvl > 0:
            lvl -= 1
            mins, maxs = self._mins[lvl], self._maxs[lvl]
            lo, hi = j * k, min((j + 1) * k, len(mins))
            kids = range(lo, hi) if leftmost else range(hi - 1, lo - 1, -1)
            for c in kids:
                if mins[c] <= d <= maxs[c]:
                    j = c
                    break
        return j

    def _block_min(self, lvl, lo, hi):
        """(value, index) of the leftmost minimum among nodes lo..hi of a level."""
        mins = self._mins[lvl]
        k = self._arity
        if hi - lo < 2 * k or lvl + 1 == len(self._mins):
            seg = mins[lo:hi + 1]
            v = min(seg)
            return v, lo + seg.index(v)
        g_lo, g_hi = lo // k + 1, hi // k - 1
        parts = []
        seg = mins[lo:g_lo * k]
        if seg:
            v = min(seg)
            parts.append((v, lo + seg.index(v)))
        if g_lo <= g_hi:
            v, g = self._block_min(lvl + 1, g_lo, g_hi)
            # leftmost child of g holding v
            seg = mins[g * k:(g + 1) * k]
            parts.append((v, g * k + seg.index(v)))
        seg = mins[(g_hi + 1) * k:hi + 1]
        if seg:
            v = min(seg)
            parts.append((v, (g_hi + 1) * k + seg.index(v)))
        best = parts[0]
        for p in parts[1:]:
            if p[0] < best[0]:
                best = p
        return best

    # -- searches ----------------------------------------------------------

    def fwd_excess_search(self, i, d):
        """Smallest p > i with excess(p) == d, or None."""
        self._check(i)
        return self._fwd(i, self._excess(i), d)

    def _fwd(self, i, e, d):
        b = self._block
        blk = i // b
        end = min((blk + 1) * b, self._n)
        r = self._scan_fwd(i + 1, end, e, d)
        if r is not None:
            return r
        nb = self._next_node(blk, d)
        if nb is None:
            return None
        start = nb * b
        before = self._excess(start - 1)
        return self._scan_fwd(start, min(start + b, self._n), before, d)

    def bwd_excess_search(self, i, d):
        """Largest p < i with excess(p) == d, or None."""
        self._check(i)
        if i == 0:
            return None
        return self._bwd(i - 1, d)

    def _bwd(self, p, d):
        # largest q <= p with excess(q) == d
        b = self._block
        blk = p // b
        r = self._scan_bwd(p, blk * b, self._excess(p), d)
        if r is not None:
            return r
        pb = self._prev_node(blk, d)
        if pb is None:
            return None
        last = min((pb + 1) * b, self._n) - 1
        return self._scan_bwd(last, pb * b, self._excess(last), d)

    def min_excess_pos(self, i, j):
        """Leftmost position in [i, j] of minimum excess."""
        if not 0 <= i <= j < self._n:
            raise IndexError(f"bad range [{i}, {j}] for length {self._n}")
        b = self._block
        bi, bj = i // b, j // b
        before = self._excess(i - 1) if i else 0
        if bi == bj:
            return self._scan_min(i, j + 1, before)[1]
        best, at = self._scan_min(i, (bi + 1) * b, before)
        if bi + 1 <= bj - 1:
            v, lvl0 = self._block_min(0, bi + 1, bj - 1)
            if v < best:
                start = lvl0 * b
                best, at = self._scan_min(start, start + b, self._excess(start - 1))
        start = bj * b
        v, pos = self._scan_min(start, j + 1, self._excess(start - 1))
        if v < best:
            at = pos
        return at

    # -- matching ----------------------------------------------------------

    def _require(self, i, want_open):
        self._check(i)
        if (self._data[i >> 3] >> (i & 7) & 1) != want_open:
            kind = "open" if want_open else "close"
            raise InvalidNodeError(f"position {i} is not an {kind} parenthesis")

    def find_close(self, i):
        """Position of the ``)`` matching the ``(`` at i."""
        self._require(i, 1)
        return self._find_close(i)

    def _find_close(self, i):
        e = self._excess(i)
        return self._fwd(i, e, e - 1)

    def find_open(self, i):
        """Position of the ``(`` matching the ``)`` at i."""
        self._require(i, 0)
        return self._find_open(i)

    def _find_open(self, i):
        # the match q is one past the last p < i with excess(p) == excess(i);
        # p = -1 (excess 0) is implicit
        r = self._bwd(i - 1, self._excess(i))
        return 0 if r is None else r + 1

    def enclose(self, i):
        """Open position of the tightest pair strictly enclosing pair i."""
        self._require(i, 1)
        return self._enclose(i)

    def _enclose(self, i):
        e = self._excess(i)
        if e == 1:
            return None
        r = self._bwd(i - 1, e - 2)
        return 0 if r is None else r + 1


def build_paren(parens, block=512, arity=32):
    """Build a :class:`ParenSupport`; raises on unbalanced input."""
    return ParenSupport(parens, block=block, arity=arity)
