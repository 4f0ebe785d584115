"""One binary tree, four ordinal transforms, several encodings."""
from succinct_trees import reference as R
from succinct_trees.reference import Variant

# a root whose left child has two leaves
t = R.LinkedBinaryTree.from_nested((((None, None), (None, None)), None))
print("binary nodes", t.n, "zaks", R.zaks(t))

for v in Variant:
    o, _ = R.transform(v, t)
    print(v.name, "BP", R.encode_bp(o), "DFUDS", R.encode_dfuds(o))

# BP of the first transform is "(" followed by the Zaks sequence
o1, _ = R.transform(Variant.T1, t)
assert R.encode_bp(o1) == "(" + R.zaks(t)

# and it equals the DFUDS of the fourth
o4, _ = R.transform(Variant.T4, t)
assert R.encode_bp(o1) == R.encode_dfuds(o4)
print("identities hold")
