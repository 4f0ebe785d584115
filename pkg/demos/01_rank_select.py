"""Rank and select over a plain bit vector."""
import numpy as np

from succinct_trees import build_bits

# a random 0/1 vector, a bit over 1 in 3 set
rng = np.random.default_rng(1)
raw = (rng.random(100_000) < 0.35).astype(np.uint8)
bv = build_bits(raw)

print("length", bv.n_bits, "ones", bv.count(1))
print("first 40 bits", bv.to_string()[:40])

# rank1(i) counts ones in [0, i]; select1(j) is where the j-th one sits
i = 12_345
print("rank1(%d) = %d, numpy says %d" % (i, bv.rank1(i), raw[: i + 1].sum()))
j = bv.rank1(i)
print("select1(%d) = %d" % (j, bv.select1(j)))

# the two are inverse on positions holding a one
ones = np.flatnonzero(raw)
assert all(bv.select1(bv.rank1(int(p))) == p for p in ones[:1000])

# the directory costs a few percent on top of the bits
print("index overhead %.1f%%" % (100 * bv.index_bits() / bv.n_bits))
