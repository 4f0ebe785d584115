import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from succinct_trees import reference as R
from succinct_trees.cartesian import (OutputTape, RmqIndex, StreamState, build_rmq,
                                      build_rmq_from_array, build_stream, rmq)
from succinct_trees.errors import MalformedEncodingError, QueryRangeError
from succinct_trees.reference import Variant


class WriteOnceSink:
    """Output memory that refuses second writes and reads of unwritten cells."""

    def __init__(self, size):
        self.bits = bytearray(size)
        self.done = bytearray(size)

    def write(self, pos, bit):
        assert not self.done[pos], f"position {pos} written twice"
        self.done[pos] = 1
        self.bits[pos] = bit

    def read(self, pos):
        assert self.done[pos], f"position {pos} read before it was written"
        return self.bits[pos]


def oracle(a):
    return R.encode_bp(R.transform(Variant.T4, R.naive_cartesian(a))[0])


def test_examples():
    assert build_stream([3, 1, 2]) == "(()(()))"
    assert build_stream([5]) == "(())"
    assert build_stream([3, 2, 1]) == "(()()())"
    assert build_stream([1, 2, 3]) == "(((())))"
    assert build_stream([]) == "()"


def test_rmq_examples():
    q = build_rmq(build_stream([3, 1, 2]), 3)
    assert q.encoding_bits() == 8
    assert rmq(q, 1, 3) == 2
    assert [q.rmq(i, i) for i in (1, 2, 3)] == [1, 2, 3]
    assert build_rmq("(())").n == 1
    assert build_rmq(build_stream([1, 1]), 2).rmq(1, 2) == 1


def test_rmq_errors():
    q = build_rmq(build_stream([3, 1, 2]), 3)
    for i, j in [(0, 1), (2, 1), (1, 4), (-1, 2)]:
        with pytest.raises(QueryRangeError):
            q.rmq(i, j)
    with pytest.raises(IndexError):
        q.rmq(3, 2)
    with pytest.raises(MalformedEncodingError):
        build_rmq("(()", 1)
    with pytest.raises(MalformedEncodingError):
        build_rmq("(())", 2)


def brute(a, i, j):
    return i + int(np.argmin(a[i - 1:j]))


@pytest.mark.parametrize("hi", [2, 10, 10**9])
def test_stream_and_rmq_random(hi):
    rng = np.random.default_rng(hi)
    for _ in range(60):
        n = int(rng.integers(1, 700))
        a = rng.integers(0, hi, n)
        s = build_stream(a)
        assert s == oracle(a)
        assert s == R.encode_pods(R.transform(Variant.T1, R.naive_cartesian(a))[0])
        q = build_rmq(s, n)
        for _ in range(100):
            i, j = sorted(rng.integers(1, n + 1, 2).tolist())
            want = brute(a, i, j)
            assert q.rmq(i, j) == want
            assert q.rmq_by_lca(i, j) == want
            assert q.rmq_scan(i, j) == want


def test_rmq_exhaustive_small():
    rng = np.random.default_rng(3)
    for n in range(1, 40):
        a = rng.integers(0, 4, n)
        q = build_rmq_from_array(a)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                assert q.rmq(i, j) == brute(a, i, j)


def test_rmq_many_matches_scalar():
    rng = np.random.default_rng(4)
    a = rng.integers(0, 50, 3000)
    q = build_rmq_from_array(a)
    i = rng.integers(1, 3001, 2000)
    j = rng.integers(1, 3001, 2000)
    i, j = np.minimum(i, j), np.maximum(i, j)
    got = q.rmq_many(i, j)
    assert got.tolist() == [q.rmq(x, y) for x, y in zip(i.tolist(), j.tolist())]
    with pytest.raises(QueryRangeError):
        q.rmq_many([2], [1])


def test_large_rmq_spans_many_blocks():
    rng = np.random.default_rng(5)
    a = rng.integers(0, 1000, 200000)
    q = build_rmq_from_array(a)
    for _ in range(300):
        i, j = sorted(rng.integers(1, a.size + 1, 2).tolist())
        assert q.rmq(i, j) == brute(a, i, j)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=300))
def test_write_once_and_paths_agree(a):
    n = len(a)
    sink = WriteOnceSink(2 * n + 2)
    st_py = StreamState(a, sink)
    st_py.run()
    assert all(sink.done)
    st_fast = StreamState(a)
    st_fast.run()
    assert bytes(sink.bits) == bytes(st_fast.sink.buf)
    assert st_py.aux_peak_words == st_fast.aux_peak_words
    assert st_fast.sink.to_string() == oracle(a)


def test_non_numeric_values_use_python_path():
    a = ["pear", "apple", "fig"]
    assert build_stream(a) == oracle([2, 0, 1])
    big = [2**70, 2**69, 2**71]
    assert build_stream(big) == oracle([1, 0, 2])


def test_sink_is_returned():
    tape = OutputTape(8)
    assert build_stream([3, 1, 2], sink=tape) is tape
    assert tape.to_string() == "(()(()))"


@pytest.mark.parametrize("n", [100, 10000, 250000])
def test_aux_bound(n):
    for a in (np.arange(n), np.arange(n)[::-1], np.random.default_rng(n).integers(0, 10, n)):
        st_ = StreamState(a)
        st_.run()
        assert st_.aux_peak_words <= 64 * math.isqrt(n)


def test_index_roundtrip():
    q = build_rmq_from_array([5, 3, 8, 1, 9])
    back = RmqIndex.from_bytes(q.to_bytes())
    assert [back.rmq(1, k) for k in range(1, 6)] == [1, 2, 2, 4, 4]
