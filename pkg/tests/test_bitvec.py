import numpy as np
import pytest
from hypothesis import given, strategies as st

from succinct_trees.bitvec import RankSelectBits, build_bits, pack_bits
from succinct_trees.errors import MalformedEncodingError, NotFoundError


def oracle_check(bits, bv):
    bits = np.asarray(bits, dtype=np.int64)
    ones = np.cumsum(bits)
    zeros = np.arange(1, bits.size + 1) - ones
    for i in range(bits.size):
        assert bv.access(i) == bits[i]
        assert bv.rank1(i) == ones[i]
        assert bv.rank0(i) == zeros[i]
    for j, p in enumerate(np.flatnonzero(bits == 1), 1):
        assert bv.select1(j) == p
    for j, p in enumerate(np.flatnonzero(bits == 0), 1):
        assert bv.select0(j) == p


def test_small_examples():
    bv = build_bits("1010")
    assert bv.rank1(3) == 2
    assert bv.access(0) == 1 and bv.access(3) == 0
    assert bv.select(1, 2) == 2
    assert bv.select(0, 1) == 1
    bv = build_bits("1100")
    assert bv.rank(1, 1) == 2
    assert bv.rank(0, 3) == 2


def test_empty():
    bv = build_bits([])
    assert len(bv) == 0
    with pytest.raises(IndexError):
        bv.rank1(0)
    with pytest.raises(IndexError):
        bv.access(0)
    with pytest.raises(NotFoundError):
        bv.select1(1)
    with pytest.raises(NotFoundError):
        bv.select0(1)


def test_errors():
    bv = build_bits("0110")
    with pytest.raises(IndexError):
        bv.rank(1, 4)
    with pytest.raises(IndexError):
        bv.rank0(-1)
    with pytest.raises(NotFoundError):
        bv.select1(3)
    with pytest.raises(NotFoundError):
        bv.select0(0)
    with pytest.raises(MalformedEncodingError):
        build_bits("01x")
    with pytest.raises(MalformedEncodingError):
        build_bits([0, 2])


def test_input_forms():
    want = build_bits("0110")
    assert build_bits(")(()") == want
    assert build_bits([0, 1, 1, 0]) == want
    assert build_bits(np.array([False, True, True, False])) == want
    assert want.to_string() == "0110"


@pytest.mark.parametrize("n", [1, 63, 64, 65, 511, 512, 513, 4096, 70000])
@pytest.mark.parametrize("density", [0.02, 0.5, 0.98])
def test_against_scan(n, density, rng):
    bits = (rng.random(n) < density).astype(np.uint8)
    oracle_check(bits, build_bits(bits))


def test_small_blocks(rng):
    bits = (rng.random(5000) < 0.3).astype(np.uint8)
    oracle_check(bits, RankSelectBits(bits, block_bits=64))


def test_million_random_ranks(rng):
    bits = rng.integers(0, 2, 10**6).astype(np.uint8)
    bv = build_bits(bits)
    ones = np.cumsum(bits)
    idx = rng.integers(0, bits.size, 20000)
    assert [bv.rank1(int(i)) for i in idx] == ones[idx].tolist()
    pos1 = np.flatnonzero(bits)
    js = rng.integers(1, pos1.size + 1, 5000)
    assert [bv.select1(int(j)) for j in js] == pos1[js - 1].tolist()


def test_dense_runs():
    # long runs make select cross many blocks and samples
    bits = np.concatenate([np.ones(200000, np.uint8), np.zeros(150000, np.uint8),
                           np.ones(3, np.uint8)])
    bv = build_bits(bits)
    assert bv.select1(200001) == 350000
    assert bv.select0(150000) == 349999
    assert bv.rank0(len(bits) - 1) == 150000


@given(st.lists(st.booleans(), max_size=2000))
def test_rank_select_duality(bits):
    bv = build_bits(np.array(bits, dtype=np.uint8))
    for i, b in enumerate(bits):
        r = bv.rank(b, i)
        assert bv.select(b, r) <= i
        assert bv.rank1(i) + bv.rank0(i) == i + 1
    for b in (0, 1):
        for j in range(1, bv.count(b) + 1):
            assert bv.rank(b, bv.select(b, j)) == j


@given(st.lists(st.booleans(), max_size=3000))
def test_serialization_roundtrip(bits):
    bv = build_bits(np.array(bits, dtype=np.uint8))
    blob = bv.to_bytes()
    assert blob[:4] == b"SBV1"
    assert len(blob) == 12 + 8 * ((len(bits) + 63) // 64)
    back = RankSelectBits.from_bytes(blob)
    assert back == bv
    assert back.to_numpy().tolist() == [int(b) for b in bits]


def test_serialized_layout():
    # bit 0 is the least significant bit of the first word
    blob = build_bits("1" + "0" * 63 + "01").to_bytes()
    assert int.from_bytes(blob[4:12], "little") == 66
    assert int.from_bytes(blob[12:20], "little") == 1
    assert int.from_bytes(blob[20:28], "little") == 2


def test_bad_serialized():
    with pytest.raises(MalformedEncodingError):
        RankSelectBits.from_bytes(b"XXXX" + bytes(8))
    with pytest.raises(MalformedEncodingError):
        RankSelectBits.from_bytes(b"SBV1" + (65).to_bytes(8, "little") + bytes(8))


def test_stray_bits_cleared():
    data, _ = pack_bits("111")
    bv = RankSelectBits.from_packed(b"\xff" * 8, 3)
    assert bv.data == data
    assert bv.count(1) == 3


def test_rebuild_is_deterministic(rng):
    bits = rng.integers(0, 2, 30000).astype(np.uint8)
    a, b = build_bits(bits), build_bits(bits)
    for i in rng.integers(0, bits.size, 500):
        assert a.rank1(int(i)) == b.rank1(int(i))
    assert a.index_bits() == b.index_bits()


def test_index_overhead():
    bits = np.random.default_rng(7).integers(0, 2, 1 << 20).astype(np.uint8)
    bv = build_bits(bits)
    assert bv.index_bits() <= 0.25 * len(bv)
