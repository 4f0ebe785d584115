"""Cartesian trees for range-minimum queries.

:func:`build_stream` writes the BP sequence of the T4-transformed Cartesian
tree of an array in a single left-to-right pass.  Besides the output it keeps
only a block directory and the unmatched positions of the last output block,
about ``sqrt(n)`` words in total: the unmatched open parentheses of the
output already say where the current suffix minima are.

:class:`RmqIndex` answers ``rmq(i, j)`` from that sequence alone.  Ties go to
the leftmost minimum.
"""

from math import isqrt

import numpy as np

from ._kernels import rmq_batch, rmq_kernel, stream_kernel
from .bintree import SuccinctBinaryTree
from .errors import MalformedEncodingError, QueryRangeError
from .reference import Variant

# counters, cursors and block bounds held by the builder besides its lists
_FIXED_WORDS = 10
_DIR_WORDS = 5
_TAIL_WORDS = 2


class OutputTape:
    """Output memory for :func:`build_stream`: one 0/1 byte per position.

    Every position is meant to be written once and may be read back later.
    """

    def __init__(self, size):
        self.buf = bytearray(size)
        self.write = self.buf.__setitem__
        self.read = self.buf.__getitem__

    def __len__(self):
        return len(self.buf)

    def bits(self):
        return np.frombuffer(bytes(self.buf), dtype=np.uint8)

    def to_string(self):
        return bytes(self.buf).translate(bytes.maketrans(b"\x00\x01", b")(")).decode("ascii")


def _as_numeric(a):
    """``a`` as a 1-d int64 or float64 array, or None if it does not fit."""
    try:
        arr = np.asarray(a)
    except (ValueError, TypeError):
        return None
    if arr.ndim != 1:
        return None
    if arr.dtype.kind in "iub":
        if arr.dtype == np.uint64 and arr.size and arr.max() > np.iinfo(np.int64).max:
            return None
        return arr.astype(np.int64, copy=False)
    if arr.dtype.kind == "f":
        return arr.astype(np.float64, copy=False)
    return None


class StreamState:
    """One run of the streaming construction over the read-only array ``a``.

    Unmatched open number ``m`` of the output (counting from 1, the first
    being the dummy root) marks ``a[m - 2]`` as a suffix minimum.  The output
    is cut into blocks of ``floor(sqrt(n))`` positions.  ``tail`` lists
    ``(position, open number)`` for every unmatched open of the current
    block, and ``block_dir`` has one entry per earlier block that still holds
    unmatched opens::

        [block, opens before block, rightmost unmatched position,
         opens in the block before that position]

    Entries are kept in block order, so the list itself is the chain of
    qualifying blocks.  ``aux_peak`` is the largest number of working bits
    seen, counting the directory, the tail and a fixed set of counters.
    """

    def __init__(self, a, sink=None):
        self.a = a
        self.n = n = len(a)
        self.size = 2 * n + 2
        self.sink = OutputTape(self.size) if sink is None else sink
        self.block = max(1, isqrt(n))
        self.word_bits = self.size.bit_length()
        self.block_dir = []
        self.tail = []
        self.aux_peak_words = 0
        self.scanned = 0

    @property
    def aux_peak(self):
        return self.aux_peak_words * self.word_bits

    def run(self):
        """Emit the whole sequence into the sink and return the sink."""
        if isinstance(self.sink, OutputTape):
            vals = _as_numeric(self.a)
            if vals is not None:
                out = np.frombuffer(self.sink.buf, dtype=np.uint8)
                peak, self.scanned = stream_kernel(
                    vals, out, self.block, _DIR_WORDS, _TAIL_WORDS)
                self.aux_peak_words = int(peak) + _FIXED_WORDS
                return self.sink
        return self._run_py()

    def _run_py(self):
        a = self.a
        if isinstance(a, np.ndarray):
            a = a.tolist()
        sink = self.sink
        write = sink.write
        read = sink.read
        b = self.block
        tail = self.tail
        bdir = self.block_dir
        tail_pop = tail.pop
        tail_append = tail.append

        pos = 0
        opens = 0
        blk = 0
        blk_end = b
        blk_opens = 0
        peak = 0
        k = 0  # suffix minima, not counting the dummy root

        # dummy root
        write(0, 1)
        opens = 1
        pos = 1
        tail_append((0, 1))
        top = 1

        for i in range(self.n):
            x = a[i]
            while k and a[top - 2] > x:
                if pos >= blk_end:
                    if tail:
                        p, r = tail[-1]
                        bdir.append([blk, blk_opens, p, r - 1 - blk_opens])
                        tail.clear()
                    blk = pos // b
                    blk_end = pos + b
                    blk_opens = opens
                write(pos, 0)
                pos += 1
                k -= 1
                # the close matched the rightmost unmatched open; find the next
                if tail:
                    tail_pop()
                    top = tail[-1][1] if tail else bdir[-1][1] + bdir[-1][3] + 1
                    continue
                # it matched the directory's top entry: scan that block leftwards
                ent = bdir[-1]
                q = ent[2] - 1
                start = ent[0] * b
                depth = 0
                seen = 0
                while q >= start:
                    if read(q):
                        seen += 1
                        if depth == 0:
                            break
                        depth -= 1
                    else:
                        depth += 1
                    q -= 1
                self.scanned += ent[2] - q
                if q >= start:
                    ent[2] = q
                    ent[3] -= seen
                    top = ent[1] + ent[3] + 1
                else:
                    bdir.pop()
                    ent = bdir[-1]
                    top = ent[1] + ent[3] + 1
            if pos >= blk_end:
                if tail:
                    p, r = tail[-1]
                    bdir.append([blk, blk_opens, p, r - 1 - blk_opens])
                    tail.clear()
                blk = pos // b
                blk_end = pos + b
                blk_opens = opens
            write(pos, 1)
            opens += 1
            tail_append((pos, opens))
            top = opens
            pos += 1
            k += 1
            words = _DIR_WORDS * len(bdir) + _TAIL_WORDS * len(tail)
            if words > peak:
                peak = words

        # what is left on the stack closes in one run, then the dummy root
        for p in range(pos, self.size):
            write(p, 0)
        self.aux_peak_words = peak + _FIXED_WORDS
        return sink


def build_stream(a, sink=None):
    """BP sequence of the T4 transform of the Cartesian tree of ``a``.

    ``a`` needs ``len`` and indexing.  Returns a ``(``/``)`` string of length
    ``2 * len(a) + 2``; pass ``sink`` to receive the output instead (an
    object with ``write(pos, bit)`` and ``read(pos)``) and use
    :class:`StreamState` directly to get the memory statistics.
    """
    st = StreamState(a, sink)
    st.run()
    if sink is None:
        return st.sink.to_string()
    return sink


class RmqIndex:
    """Range-minimum index over an array of length ``n``; the array itself
    is not kept."""

    def __init__(self, tree):
        if tree.variant is not Variant.T4:
            raise MalformedEncodingError("RMQ needs a T4 encoding")
        self.tree = tree
        self.n = tree.n
        sup = tree.tree.support
        self._sup = sup
        self._bits = sup.bits
        self._args = self._kernel_args()

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"RmqIndex(n={self.n})"

    def _kernel_args(self):
        bits = self._bits
        sup = self._sup
        mins = sup._mins
        return (np.frombuffer(bits.data, dtype="<u8"),
                np.frombuffer(bits._super, dtype=np.uint64),
                np.frombuffer(bits._block, dtype=np.uint16),
                np.frombuffer(bits._samp1, dtype=np.uint32),
                bits._lg_block, bits._lg_per_super, bits._n_blocks,
                np.frombuffer(mins[0], dtype=np.int32),
                np.frombuffer(mins[1], dtype=np.int32) if len(mins) > 1
                else np.zeros(0, np.int32),
                sup._block, sup._arity)

    def rmq(self, i, j):
        """1-based position of the leftmost minimum of ``A[i..j]``."""
        if not 1 <= i <= j <= self.n:
            raise QueryRangeError(f"range [{i}, {j}] not inside [1, {self.n}]")
        return int(rmq_kernel(*self._args, i, j))

    def rmq_many(self, i, j):
        """Vectorised :meth:`rmq` over two equal-length index arrays."""
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        if i.shape != j.shape:
            raise ValueError("index arrays differ in shape")
        if i.size and not (np.all(1 <= i) and np.all(i <= j) and np.all(j <= self.n)):
            raise QueryRangeError(f"some range is not inside [1, {self.n}]")
        return rmq_batch(*self._args, i.ravel(), j.ravel()).reshape(i.shape)

    def rmq_scan(self, i, j):
        """:meth:`rmq` in plain Python over the same index (no compiled code)."""
        if not 1 <= i <= j <= self.n:
            raise QueryRangeError(f"range [{i}, {j}] not inside [1, {self.n}]")
        if i == j:
            return i
        bits = self._bits
        sup = self._sup
        # A[k] is the (k+1)-th open.  The open of the answer directly follows
        # the rightmost minimum of excess over [open(i) - 1, open(j)].
        x = bits._select(1, i + 1)
        y = bits._select(1, j + 1)
        m = sup.min_excess_pos(x - 1, y)
        r = sup._bwd(y, sup._excess(m))
        return bits._rank1(r + 1) - 1

    def rmq_by_lca(self, i, j):
        """Same answer as :meth:`rmq`, spelled out through the binary tree."""
        if not 1 <= i <= j <= self.n:
            raise QueryRangeError(f"range [{i}, {j}] not inside [1, {self.n}]")
        t = self.tree
        return t.inorder_rank(t.lca_b(t.select_inorder(i), t.select_inorder(j)))

    def to_bytes(self):
        return self.tree.to_bytes()

    @classmethod
    def from_bytes(cls, blob):
        return cls(SuccinctBinaryTree.from_bytes(blob))

    def index_bits(self):
        return self.tree.index_bits()

    def encoding_bits(self):
        return self.tree.encoding_bits()


def build_rmq(parens, n=None):
    """Wrap a BP(T4) sequence of a Cartesian tree.  ``n`` is checked if given."""
    t = SuccinctBinaryTree(parens, Variant.T4)
    if n is not None and t.n != n:
        raise MalformedEncodingError(f"sequence encodes {t.n} elements, expected {n}")
    return RmqIndex(t)


def rmq(q, i, j):
    return q.rmq(i, j)


def build_rmq_from_array(a):
    """Stream ``a`` into its Cartesian tree encoding and index it."""
    st = StreamState(a)
    st.run()
    return build_rmq(st.sink.bits(), len(a))
