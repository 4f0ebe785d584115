import numpy as np
import pytest

from succinct_trees import reference as R
from succinct_trees.bintree import SuccinctBinaryTree, build
from succinct_trees.errors import InvalidNodeError, MalformedEncodingError, NotFoundError
from succinct_trees.reference import LinkedBinaryTree, Variant

ABC = LinkedBinaryTree.from_nested(((None, None), (None, None)))


def handles(sbt, t, v):
    o, _ = R.transform(v, t)
    pos = R.bp_open_positions(o)
    return {k: int(pos[k + 1]) for k in range(t.n)}


def test_build_examples():
    assert build(LinkedBinaryTree.from_nested((None, None))).bp_string() == "(())"
    assert build(ABC, Variant.T1).bp_string() == "((())())"
    assert build(ABC, Variant.T4).bp_string() == "(()(()))"
    for v in Variant:
        assert build(ABC, v).encoding_bits() == 8


def test_t1_examples():
    s = build(ABC, "t1")
    a, b, c = 1, 2, 5
    assert s.root_b() == a
    assert s.left_child(a) == b and s.right_child(a) == c
    assert s.left_child(b) is None and s.right_child(c) is None
    assert s.parent_b(b) == a and s.parent_b(c) == a and s.parent_b(a) is None
    assert s.subtree_size_b(a) == 3 and s.subtree_size_b(b) == 1
    # the table's exclusive expression: preorder(c) - preorder(a) = 4 - 2
    assert s.subtree_size_b(a) - 1 == s.tree.preorder(c) - s.tree.preorder(a)
    assert s.lca_b(b, c) == a and s.lca_b(a, b) == a and s.lca_b(c, c) == c
    assert [s.inorder_rank(x) for x in (b, a, c)] == [1, 2, 3]
    assert [s.order_rank(x) for x in (a, b, c)] == [1, 2, 3]
    assert s.is_leaf_b(b) and not s.is_leaf_b(a)


def test_t4_examples():
    s = build(ABC, "t4")
    b, a, c = 1, 3, 4
    assert s.root_b() == a
    assert s.left_child(a) == b and s.right_child(a) == c
    assert s.parent_b(b) == a and s.parent_b(c) == a
    assert s.subtree_size_b(a) == 3
    assert [s.inorder_rank(x) for x in (b, a, c)] == [1, 2, 3]
    assert s.lca_b(b, c) == a


def test_empty_tree():
    s = build(LinkedBinaryTree.empty(), Variant.T2)
    assert s.size() == 0 and s.root_b() is None and s.bp_string() == "()"
    with pytest.raises(NotFoundError):
        s.select_inorder(1)


def test_invalid_handles():
    s = build(ABC, Variant.T1)
    for bad in (0, 3, 8, -1, None):
        with pytest.raises(InvalidNodeError):
            s.left_child(bad)
    with pytest.raises(NotFoundError):
        s.select_inorder(4)


def test_order_kinds():
    s1 = build(ABC, Variant.T2)
    s3 = build(ABC, Variant.T3)
    assert s1.preorder_rank(s1.root_b()) == 1
    assert s3.postorder_rank(s3.root_b()) == 3
    with pytest.raises(NotImplementedError):
        s1.postorder_rank(s1.root_b())
    with pytest.raises(NotImplementedError):
        s3.preorder_rank(s3.root_b())


def nn(x):
    return None if x < 0 else int(x)


@pytest.mark.parametrize("variant", list(Variant))
def test_against_oracle(variant):
    rng = np.random.default_rng(int(variant))
    for trial in range(40):
        n = int(rng.integers(1, 513))
        t = R.random_binary_tree(n, rng)
        orc = R.BinaryOracle(t)
        s = SuccinctBinaryTree.from_linked(t, variant)
        assert s.encoding_bits() == 2 * (n + 1)
        h = handles(s, t, variant)
        back = {p: k for k, p in h.items()}

        def m(x):
            return None if x is None else back[x]

        order = orc.preorder if variant in (Variant.T1, Variant.T2) else orc.postorder
        assert m(s.root_b()) == t.root
        for k in range(n):
            u = h[k]
            assert m(s.left_child(u)) == nn(t.left[k])
            assert m(s.right_child(u)) == nn(t.right[k])
            assert m(s.parent_b(u)) == nn(orc.parent[k])
            assert s.subtree_size_b(u) == orc.size[k]
            assert s.inorder_rank(u) == orc.inorder[k]
            assert s.order_rank(u) == order[k]
            assert s.select_inorder(s.inorder_rank(u)) == u
            assert s.select_order(s.order_rank(u)) == u
            assert s.is_leaf_b(u) == (t.left[k] < 0 and t.right[k] < 0)
        for _ in range(64):
            x, y = rng.integers(0, n, 2)
            w = s.lca_b(h[x], h[y])
            assert w == s.lca_b(h[y], h[x])
            assert m(w) == orc.lca(x, y)
            assert orc.is_ancestor(m(w), x) and orc.is_ancestor(m(w), y)


@pytest.mark.parametrize("variant", list(Variant))
def test_serialization(variant):
    t = R.random_binary_tree(300, 2)
    s = SuccinctBinaryTree.from_linked(t, variant)
    blob = s.to_bytes()
    assert blob[:4] == b"SBT1" and blob[4] == int(variant)
    assert int.from_bytes(blob[5:13], "little") == 300
    assert len(blob) == 13 + 8 * ((2 * 301 + 63) // 64)
    back = SuccinctBinaryTree.from_bytes(blob)
    assert back.variant is variant and back.bp_string() == s.bp_string()
    assert back.to_linked() == t


def test_bad_serialized():
    blob = build(ABC).to_bytes()
    for bad in (b"", b"SBT0" + blob[4:], blob[:4] + b"\x09" + blob[5:], blob[:-1]):
        with pytest.raises(MalformedEncodingError):
            SuccinctBinaryTree.from_bytes(bad)
    with pytest.raises(MalformedEncodingError):
        SuccinctBinaryTree.from_bytes(blob[:13] + b"\xff" * 8)


def test_zaks_import_export():
    s = SuccinctBinaryTree.from_zaks("())")
    assert s.bp_string() == "(())" and s.to_zaks() == "())"
    t = R.random_binary_tree(100, 8)
    z = R.zaks(t)
    s = build(z)
    assert s.to_zaks() == z and s.to_linked() == t
    assert build(z, Variant.T3).bp_string() == R.encode_bp(R.transform(3, t)[0])
    with pytest.raises(ValueError):
        build(t, Variant.T2).to_zaks()
