"""Range minima after one streaming pass over the array."""
import time

import numpy as np

from succinct_trees import StreamState, build_rmq, build_stream

a = [3, 1, 2]
print(a, "->", build_stream(a))

# a million values; the array is read once and can then be dropped
rng = np.random.default_rng(0)
a = rng.integers(0, 10**9, 1_000_000)
t0 = time.perf_counter()
st = StreamState(a)
st.run()
print("built in %.3fs, peak working memory %d words (sqrt(n) = %d)"
      % (time.perf_counter() - t0, st.aux_peak_words, int(np.sqrt(a.size))))

q = build_rmq(st.sink.bits(), a.size)
i, j = 1000, 654_321
k = q.rmq(i, j)
print("rmq(%d, %d) = %d, value %d, numpy min %d" % (i, j, k, a[k - 1], a[i - 1 : j].min()))

# many queries at once
ii = rng.integers(1, a.size // 2, 100_000)
jj = ii + rng.integers(0, a.size // 2, ii.size)
t0 = time.perf_counter()
ans = q.rmq_many(ii, jj)
print("100000 queries in %.3fs" % (time.perf_counter() - t0))
print("index overhead %.1f%%" % (100 * q.index_bits() / q.encoding_bits()))
