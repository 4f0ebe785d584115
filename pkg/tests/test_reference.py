import numpy as np
import pytest

from succinct_trees import reference as R
from succinct_trees.errors import MalformedEncodingError
from succinct_trees.reference import LinkedBinaryTree, Variant

ABC = LinkedBinaryTree.from_nested(((None, None), (None, None)))
SINGLE = LinkedBinaryTree.from_nested((None, None))


def bp(v, t):
    return R.encode_bp(R.transform(v, t)[0])


def dfuds(v, t, rtl=False):
    o = R.transform(v, t)[0]
    return R.encode_dfuds_rtl(o) if rtl else R.encode_dfuds(o)


def mirror_string(s):
    return s[::-1].translate(str.maketrans("()", ")("))


def test_transform_examples():
    o, corr = R.transform(Variant.T1, SINGLE)
    assert o.n_nodes == 2 and o.child_list(0) == [1]
    assert corr.tolist() == [1]
    # a=0, b=1, c=2 -> ordinal ids 1, 2, 3
    o, _ = R.transform(Variant.T1, ABC)
    assert o.child_list(0) == [1, 3] and o.child_list(1) == [2]
    o, _ = R.transform(Variant.T4, ABC)
    assert o.child_list(0) == [2, 1] and o.child_list(1) == [3]
    o, _ = R.transform(Variant.T1, LinkedBinaryTree.empty())
    assert o.n_nodes == 1 and R.encode_bp(o) == "()"


def test_encoder_examples():
    one = R.LinkedOrdinalTree.from_child_lists([[]])
    assert R.encode_bp(one) == R.encode_dfuds(one) == R.encode_pods(one) == "()"
    assert bp(1, ABC) == "((())())"
    assert bp(4, ABC) == "(()(()))"
    assert dfuds(4, ABC) == "((())())"
    assert bp(1, SINGLE) == "(())"


def test_dfuds_t3_example():
    # T3 of a(b,c): dummy -> (a, b), a -> (c)
    assert dfuds(3, ABC) == "((()()))"
    assert dfuds(2, ABC) == bp(3, ABC) == "((())())"
    assert bp(2, ABC) == "(()(()))"


def test_pods_example():
    t = R.naive_cartesian([3, 1, 2])
    assert R.encode_pods(R.transform(1, t)[0]) == "(()(()))"


def test_zaks_examples():
    assert R.zaks(SINGLE) == "())"
    assert R.zaks(ABC) == "(())())"
    assert R.zaks(LinkedBinaryTree.from_nested(((None, None), None))) == "(()))"


def test_zaks_correspondence():
    t = R.random_binary_tree(200, 4)
    orc = R.BinaryOracle(t)
    opens, closes = R.zaks_correspondence(t)
    assert [orc.preorder[k] for k in opens] == list(range(1, 201))
    assert [orc.inorder[k] for k in closes[:200]] == list(range(1, 201))


def test_oracle_examples():
    orc = R.naive_ops(ABC)
    assert orc.inorder.tolist() == [2, 1, 3]
    assert orc.lca(1, 2) == 0
    assert orc.size[0] == 3


def test_naive_cartesian():
    t = R.naive_cartesian([3, 1, 2])
    assert (t.root, t.left[1], t.right[1]) == (1, 0, 2)
    t = R.naive_cartesian([1])
    assert t.n == 1 and t.root == 0
    t = R.naive_cartesian([1, 1])
    assert t.root == 0 and t.right[0] == 1 and t.left[0] == -1
    assert R.naive_cartesian([]).n == 0


@pytest.mark.parametrize("n", [1, 2, 3, 7, 50, 333])
def test_bp_dfuds_identities(n):
    for seed in range(30):
        t = R.random_binary_tree(n, seed)
        b = {v: bp(v, t) for v in Variant}
        assert mirror_string(b[Variant.T1]) == b[Variant.T2]
        assert mirror_string(b[Variant.T3]) == b[Variant.T4]
        assert dfuds(1, t) == dfuds(2, t, rtl=True)
        assert dfuds(3, t) == dfuds(4, t, rtl=True)
        assert b[Variant.T1] == dfuds(4, t)
        assert b[Variant.T3] == dfuds(2, t)
        assert "(" + R.zaks(t) == b[Variant.T1]
        assert R.encode_pods(R.transform(1, t)[0]) == b[Variant.T4]


def test_literal_t2_t3_clause_is_false():
    # BP(T2) = DFUDS(T3) fails already on a(b,c); its mirror twin holds
    assert bp(2, ABC) != dfuds(3, ABC)
    assert bp(3, ABC) == dfuds(2, ABC)


@pytest.mark.parametrize("n", [0, 1, 5, 100])
def test_roundtrips(n):
    for seed in range(10):
        t = R.random_binary_tree(n, seed)
        if n:
            assert R.decode_zaks(R.zaks(t)) == t
        for v in Variant:
            o, _ = R.transform(v, t)
            assert R.inverse_transform(v, o) == t
            assert R.inverse_transform(v, R.decode_bp(R.encode_bp(o))) == t
            assert R.inverse_transform(v, R.decode_dfuds(R.encode_dfuds(o))) == t
            assert R.encode_bp(R.decode_dfuds(R.encode_dfuds_rtl(o), rtl=True)) == R.encode_bp(o)


def test_mirror_tree_swaps_variants():
    # swapping left and right everywhere turns T1 into T3 and T4 into T2
    for seed in range(10):
        t = R.random_binary_tree(40, seed)
        swapped = LinkedBinaryTree(t.right, t.left, t.root)
        assert bp(1, swapped) == bp(3, t)
        assert bp(4, swapped) == bp(2, t)
        assert bp(2, swapped) == bp(4, t)


def test_nested_and_relabel():
    assert ABC.to_nested() == ((None, None), (None, None))
    perm = np.array([2, 0, 1])
    t = ABC.relabel(perm)
    assert t.root == 2 and t.left[2] == 0 and t.right[2] == 1
    assert t == ABC


def test_validate():
    ABC.validate()
    with pytest.raises(MalformedEncodingError):
        LinkedBinaryTree([1, 0], [-1, -1], 0).validate()
    with pytest.raises(MalformedEncodingError):
        LinkedBinaryTree([1, -1, -1], [1, -1, -1], 0).validate()
    with pytest.raises(MalformedEncodingError):
        LinkedBinaryTree([-1, -1], [-1, -1], 0).validate()


def test_decode_errors():
    for bad in ("", "(", "()(", ")(", "(()"):
        with pytest.raises(MalformedEncodingError):
            R.decode_bp(bad)
    for bad in ("", "(", "(()", "()))", "))("):
        with pytest.raises(MalformedEncodingError):
            R.decode_zaks(bad)
    assert R.decode_zaks(")").n == 0


def test_random_tree_basics():
    assert R.random_binary_tree(0, 1).n == 0
    assert R.random_binary_tree(1, 1).n == 1
    assert R.zaks(R.random_binary_tree(30, 5)) == R.zaks(R.random_binary_tree(30, 5))
    for seed in range(20):
        R.random_binary_tree(100, seed).validate()


def test_random_tree_uniform_n3():
    rng = np.random.default_rng(0)
    draws = 100000
    counts = {}
    for _ in range(draws):
        z = R.zaks(R.random_binary_tree(3, rng))
        counts[z] = counts.get(z, 0) + 1
    assert len(counts) == 5
    p = 1 / 5
    sigma = (draws * p * (1 - p)) ** 0.5
    for c in counts.values():
        assert abs(c - draws * p) <= 3 * sigma
