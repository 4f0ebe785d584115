"""Immutable bit vector with rank and select.

Bits are packed least-significant-bit first into little-endian 64-bit words,
so byte ``k`` of the packed buffer holds positions ``8k .. 8k+7``.  The rank
directory has two levels: an absolute count every 2**16 bits and a 16-bit
relative count every ``block_bits`` bits.  Select is answered from sampled
block numbers followed by a binary search over the directory and a short scan.
"""

import array
import struct

import numpy as np

from .errors import MalformedEncodingError, NotFoundError

SUPER_BITS = 1 << 16
SELECT_SAMPLE = 1024
MAGIC = b"SBV1"

_POP8 = bytes(bin(v).count("1") for v in range(256))
_SEL8 = tuple(tuple(k for k in range(8) if v >> k & 1) for v in range(256))


def as_bit_array(bits):
    """Coerce ``bits`` to a flat ``uint8`` array of 0/1 values.

    Accepts strings of ``0``/``1`` characters, strings of parentheses
    (``(`` is 1), numpy arrays and any iterable of truthy values.
    """
    if isinstance(bits, str):
        raw = np.frombuffer(bits.encode("ascii"), dtype=np.uint8)
        if raw.size == 0:
            return np.zeros(0, dtype=np.uint8)
        if raw[0] in (40, 41):
            out = raw == 40
            bad = np.flatnonzero((raw != 40) & (raw != 41))
        else:
            out = raw == 49
            bad = np.flatnonzero((raw != 48) & (raw != 49))
        if bad.size:
            raise MalformedEncodingError(
                f"unexpected character {bits[bad[0]]!r} at {bad[0]}", int(bad[0])
            )
        return out.astype(np.uint8)
    arr = bits if isinstance(bits, np.ndarray) else np.asarray(list(bits))
    arr = arr.reshape(-1)
    if arr.dtype == np.bool_:
        return arr.astype(np.uint8)
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        raise MalformedEncodingError("bit values must be 0 or 1")
    return arr.astype(np.uint8)


def pack_bits(bits):
    """Pack a 0/1 array into bytes, LSB first, padded to whole 64-bit words."""
    bits = as_bit_array(bits)
    packed = np.packbits(bits, bitorder="little")
    pad = (-packed.size) % 8
    if pad:
        packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
    return packed.tobytes(), bits.size


class RankSelectBits:
    """Packed, read-only bit sequence with rank/select support.

    Positions are 0-based and ranks 1-based: ``rank(b, i)`` counts the
    occurrences of ``b`` in ``[0, i]`` and ``select(b, j)`` returns the
    position of the ``j``-th occurrence.
    """

    def __init__(self, bits=(), block_bits=512):
        if block_bits < 64 or block_bits & (block_bits - 1) or block_bits > SUPER_BITS:
            raise ValueError("block_bits must be a power of two in [64, 65536]")
        data, n = pack_bits(bits)
        self._setup(data, n, block_bits)

    @classmethod
    def from_packed(cls, data, n_bits, block_bits=512):
        """Wrap an already packed buffer (LSB first) holding ``n_bits`` bits."""
        obj = cls.__new__(cls)
        need = ((n_bits + 63) // 64) * 8
        if len(data) < need:
            raise MalformedEncodingError("packed buffer shorter than bit count")
        bits = np.unpackbits(np.frombuffer(bytes(data[:need]), dtype=np.uint8),
                             bitorder="little")[:n_bits]
        # repacking clears stray bits past the end
        data, _ = pack_bits(bits)
        obj._setup(data, n_bits, block_bits)
        return obj

    def _setup(self, data, n, block_bits):
        self._data = data
        self._n = n
        self._lg_block = block_bits.bit_length() - 1
        self._lg_per_super = 16 - self._lg_block
        self._block_bytes = block_bits >> 3

        bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
        n_blocks = max(1, (n + block_bits - 1) >> self._lg_block)
        padded = np.zeros(n_blocks << self._lg_block, dtype=np.uint8)
        padded[: min(n, bits.size)] = bits[:n]
        per_block = padded.reshape(n_blocks, block_bits).sum(axis=1, dtype=np.int64)
        before = np.zeros(n_blocks, dtype=np.int64)
        np.cumsum(per_block[:-1], out=before[1:])
        supers = before[:: 1 << self._lg_per_super]
        rel = before - np.repeat(supers, 1 << self._lg_per_super)[:n_blocks]

        self._n_blocks = n_blocks
        self._super = array.array("Q", supers.astype(np.uint64).tobytes())
        self._block = array.array("H", rel.astype(np.uint16).tobytes())
        self._ones = int(per_block.sum())

        ones_at = np.flatnonzero(padded[:n])
        zeros_at = np.flatnonzero(padded[:n] == 0)
        self._samp1 = array.array(
            "I", (ones_at[::SELECT_SAMPLE] >> self._lg_block).astype(np.uint32).tobytes()
        )
        self._samp0 = array.array(
            "I", (zeros_at[::SELECT_SAMPLE] >> self._lg_block).astype(np.uint32).tobytes()
        )

    # -- basic facts -------------------------------------------------------

    def __len__(self):
        return self._n

    @property
    def n_bits(self):
        return self._n

    @property
    def data(self):
        """The packed payload (bytes, LSB first, whole 64-bit words)."""
        return self._data

    def count(self, b=1):
        return self._ones if b else self._n - self._ones

    def index_bits(self):
        """Size of the rank/select directory in bits."""
        return 8 * sum(a.itemsize * len(a) for a in
                       (self._super, self._block, self._samp1, self._samp0))

    def to_numpy(self):
        bits = np.unpackbits(np.frombuffer(self._data, dtype=np.uint8), bitorder="little")
        return bits[: self._n].copy()

    def to_string(self, one="1", zero="0"):
        table = bytes.maketrans(b"\x00\x01", (zero + one).encode("ascii"))
        return self.to_numpy().tobytes().translate(table).decode("ascii")

    def __eq__(self, other):
        if not isinstance(other, RankSelectBits):
            return NotImplemented
        return self._n == other._n and self._data == other._data

    def __hash__(self):
        return hash((self._n, self._data))

    def __repr__(self):
        if self._n <= 64:
            return f"RankSelectBits('{self.to_string()}')"
        return f"RankSelectBits(<{self._n} bits, {self._ones} ones>)"

    # -- queries -----------------------------------------------------------

    def _check(self, i):
        if not 0 <= i < self._n:
            raise IndexError(f"position {i} out of range [0, {self._n})")

    def access(self, i):
        self._check(i)
        return self._data[i >> 3] >> (i & 7) & 1

    __getitem__ = access

    def _ones_before_block(self, blk):
        return self._super[blk >> self._lg_per_super] + self._block[blk]

    def _rank1(self, i):
        # ones in [0, i]; i assumed in range
        blk = i >> self._lg_block
        lo = blk * self._block_bytes
        w = int.from_bytes(self._data[lo:(i >> 3) + 1], "little")
        off = i - (blk << self._lg_block)
        return (self._super[blk >> self._lg_per_super] + self._block[blk]
                + (w & ((2 << off) - 1)).bit_count())

    def rank1(self, i):
        self._check(i)
        return self._rank1(i)

    def rank0(self, i):
        self._check(i)
        return i + 1 - self._rank1(i)

    def rank(self, b, i):
        self._check(i)
        r = self._rank1(i)
        return r if b else i + 1 - r

    def _select(self, b, j):
        samples = self._samp1 if b else self._samp0
        s = (j - 1) // SELECT_SAMPLE
        lo = samples[s]
        hi = samples[s + 1] if s + 1 < len(samples) else self._n_blocks - 1
        lg = self._lg_block
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            before = self._ones_before_block(mid)
            if not b:
                before = (mid << lg) - before
            if before < j:
                lo = mid
            else:
                hi = mid - 1
        before = self._ones_before_block(lo)
        r = j - (before if b else (lo << lg) - before)
        k = lo * self._block_bytes
        data = self._data
        if b:
            while True:
                v = data[k]
                c = _POP8[v]
                if r <= c:
                    return (k << 3) + _SEL8[v][r - 1]
                r -= c
                k += 1
        while True:
            v = data[k] ^ 0xFF
            c = _POP8[v]
            if r <= c:
                return (k << 3) + _SEL8[v][r - 1]
            r -= c
            k += 1

    def select1(self, j):
        if not 1 <= j <= self._ones:
            raise NotFoundError(f"no {j}-th one (have {self._ones})")
        return self._select(1, j)

    def select0(self, j):
        if not 1 <= j <= self._n - self._ones:
            raise NotFoundError(f"no {j}-th zero (have {self._n - self._ones})")
        return self._select(0, j)

    def select(self, b, j):
        return self.select1(j) if b else self.select0(j)

    # -- serialization -----------------------------------------------------

    def to_bytes(self):
        """Header ``SBV1`` + little-endian uint64 bit count + packed words."""
        return MAGIC + struct.pack("<Q", self._n) + self._data

    @classmethod
    def from_bytes(cls, blob, block_bits=512):
        if len(blob) < 12 or blob[:4] != MAGIC:
            raise MalformedEncodingError("missing SBV1 header")
        (n,) = struct.unpack_from("<Q", blob, 4)
        body = blob[12:]
        if len(body) != ((n + 63) // 64) * 8:
            raise MalformedEncodingError("payload length does not match bit count")
        return cls.from_packed(body, n, block_bits)


def build_bits(bits, block_bits=512):
    """Build a :class:`RankSelectBits` over ``bits``."""
    return RankSelectBits(bits, block_bits=block_bits)
