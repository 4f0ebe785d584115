"""Succinct binary trees stored as the BP sequence of a transformed tree.

A binary tree with ``n`` nodes is turned into an ordinal tree with ``n + 1``
nodes (one of four transformations, see :class:`Variant`) whose BP sequence
is kept together with a :class:`~succinct_trees.ordinal.OrdinalTree` index.
Binary nodes are identified by the BP position of their ordinal node; the
dummy ordinal root (position 0) is never handed out.

Every variant supports inorder numbering.  T1 and T2 also give preorder,
T3 and T4 give postorder.
"""

import operator
import struct

import numpy as np

from . import reference
from .bitvec import RankSelectBits
from .bp import ParenSupport
from .errors import InvalidNodeError, MalformedEncodingError, NotFoundError
from .ordinal import OrdinalTree
from .reference import Variant

TREE_MAGIC = b"SBT1"


class SuccinctBinaryTree:
    """Binary tree in ``2(n+1)`` bits plus a navigation index.

    Build it with :meth:`from_linked`, :meth:`from_bp`, :meth:`from_zaks` or
    :meth:`from_bytes`.
    """

    def __init__(self, tree, variant):
        if not isinstance(tree, OrdinalTree):
            tree = OrdinalTree(tree)
        if tree.n_nodes == 0:
            raise MalformedEncodingError("a transformed tree has at least the dummy root")
        self.tree = tree
        self.variant = Variant.parse(variant)
        self.n = tree.n_nodes - 1
        self._sup = tree.support
        self._bits = tree.support.bits
        self._data = tree.support._data
        self._len = 2 * tree.n_nodes
        v = self.variant
        # sibling relation that leads to the binary parent, and whether the
        # binary root is the first or last child of the dummy root
        self._mirrored = v in (Variant.T2, Variant.T4)
        self._left_is_child = v in (Variant.T1, Variant.T2)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_linked(cls, t, variant=Variant.T1):
        """Encode a :class:`~succinct_trees.reference.LinkedBinaryTree`."""
        o, _ = reference.transform(variant, t)
        return cls(reference.encode_bp(o), variant)

    @classmethod
    def from_bp(cls, parens, variant):
        return cls(parens, variant)

    @classmethod
    def from_zaks(cls, z):
        """T1 tree from a Zaks sequence (prepend one ``(``)."""
        if isinstance(z, str):
            return cls("(" + z, Variant.T1)
        return cls(np.concatenate([[1], np.asarray(z, np.uint8)]), Variant.T1)

    def to_zaks(self):
        """Zaks sequence of the tree (only meaningful for T1 encodings)."""
        if self.variant is not Variant.T1:
            raise ValueError("Zaks export needs a T1 encoding")
        return self.tree.to_string()[1:]

    def bp_string(self):
        return self.tree.to_string()

    def encoding_bits(self):
        return self._len

    def index_bits(self):
        return self._sup.index_bits()

    def to_bytes(self):
        """``SBT1`` + variant byte + uint64 node count + packed BP words."""
        return (TREE_MAGIC + bytes([int(self.variant)])
                + struct.pack("<Q", self.n) + self._bits.data)

    @classmethod
    def from_bytes(cls, blob):
        if len(blob) < 13 or blob[:4] != TREE_MAGIC:
            raise MalformedEncodingError("missing SBT1 header")
        try:
            variant = Variant(blob[4])
        except ValueError:
            raise MalformedEncodingError(f"bad variant byte {blob[4]}") from None
        (n,) = struct.unpack_from("<Q", blob, 5)
        n_bits = 2 * (n + 1)
        body = blob[13:]
        if len(body) != ((n_bits + 63) // 64) * 8:
            raise MalformedEncodingError("payload length does not match node count")
        bits = RankSelectBits.from_packed(body, n_bits)
        return cls(OrdinalTree(ParenSupport.from_bits(bits)), variant)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"SuccinctBinaryTree(variant={self.variant.name}, n={self.n})"

    def to_linked(self):
        """Decode back to a pointer tree; node ``k`` has preorder-id ``k``."""
        return reference.inverse_transform(
            self.variant, reference.decode_bp(self.tree.to_string()))

    # -- handles -----------------------------------------------------------

    def _node(self, u):
        if type(u) is not int:
            try:
                u = operator.index(u)
            except TypeError:
                raise InvalidNodeError(f"{u!r} is not a node handle") from None
        if not (0 < u < self._len and self._data[u >> 3] >> (u & 7) & 1):
            raise InvalidNodeError(f"{u!r} is not a binary node of this tree")
        return u

    def is_node(self, u):
        try:
            self._node(u)
        except InvalidNodeError:
            return False
        return True

    def _out(self, x):
        return None if x is None or x == 0 else x

    def _next_sib(self, x):
        c = self._sup._find_close(x) + 1
        return c if c < self._len and self._data[c >> 3] >> (c & 7) & 1 else None

    def _prev_sib(self, x):
        if self._data[(x - 1) >> 3] >> ((x - 1) & 7) & 1:
            return None
        return self._sup._find_open(x - 1)

    def _first_child(self, x):
        c = x + 1
        return c if self._data[c >> 3] >> (c & 7) & 1 else None

    def _last_child(self, x):
        if not self._data[(x + 1) >> 3] >> ((x + 1) & 7) & 1:
            return None
        sup = self._sup
        return sup._find_open(sup._find_close(x) - 1)

    # -- navigation --------------------------------------------------------

    def size(self):
        return self.n

    def root_b(self):
        if self.n == 0:
            return None
        return self._last_child(0) if self._mirrored else 1

    def left_child(self, u):
        u = self._node(u)
        if self._left_is_child:
            return self._last_child(u) if self._mirrored else self._first_child(u)
        return self._prev_sib(u) if self._mirrored else self._next_sib(u)

    def right_child(self, u):
        u = self._node(u)
        if self._left_is_child:
            return self._prev_sib(u) if self._mirrored else self._next_sib(u)
        return self._last_child(u) if self._mirrored else self._first_child(u)

    def is_leaf_b(self, u):
        return self.left_child(u) is None and self.right_child(u) is None

    def parent_b(self, u):
        u = self._node(u)
        v = self._next_sib(u) if self._mirrored else self._prev_sib(u)
        if v is not None:
            return v
        return self._out(self._sup._enclose(u))

    def subtree_size_b(self, u):
        """Nodes in the subtree of u, u included."""
        u = self._node(u)
        t = self.tree
        par = self._sup._enclose(u)
        v = self.variant
        if v is Variant.T1:
            leaf = t.rightmost_leaf(par)
            excl = t.preorder(leaf) - t.preorder(u)
        elif v is Variant.T2:
            leaf = t.leftmost_leaf(par)
            excl = t.preorder_right(leaf) - t.preorder_right(u)
        elif v is Variant.T3:
            leaf = t.rightmost_leaf(par)
            excl = t.postorder_right(u) - t.postorder_right(leaf)
        else:
            leaf = t.leftmost_leaf(par)
            excl = t.postorder(u) - t.postorder(leaf)
        return excl + 1

    def lca_b(self, u, v):
        u, v = self._node(u), self._node(v)
        if u == v:
            return u
        # the pseudocode wants u to be the node whose ordinal ancestor chain
        # passes through the answer: smaller preorder for T1/T2, larger
        # postorder for T3/T4
        if self._left_is_child:
            if self.order_rank(v) < self.order_rank(u):
                u, v = v, u
        elif self.order_rank(v) > self.order_rank(u):
            u, v = v, u
        t = self.tree
        w = t.lca(u, v)
        if w == u:
            return u
        if w == self._sup._enclose(u):
            return u
        return t.ancestor_at_depth(u, t.depth(w) + 1)

    # -- numbering ---------------------------------------------------------

    def inorder_rank(self, u):
        u = self._node(u)
        t = self.tree
        v = self.variant
        if v is Variant.T1:
            return t.postorder(u)
        if v is Variant.T2:
            return t.postorder_right(u)
        if v is Variant.T3:
            return t.preorder_right(u) - 1
        return t.preorder(u) - 1

    def order_rank(self, u):
        """Preorder rank (T1, T2) or postorder rank (T3, T4) of u."""
        u = self._node(u)
        t = self.tree
        v = self.variant
        if v is Variant.T1:
            return t.preorder(u) - 1
        if v is Variant.T2:
            return t.preorder_right(u) - 1
        return t.postorder(u) if v is Variant.T4 else t.postorder_right(u)

    def preorder_rank(self, u):
        if self.variant not in (Variant.T1, Variant.T2):
            raise NotImplementedError(f"{self.variant.name} does not support preorder")
        return self.order_rank(u)

    def postorder_rank(self, u):
        if self.variant not in (Variant.T3, Variant.T4):
            raise NotImplementedError(f"{self.variant.name} does not support postorder")
        return self.order_rank(u)

    def select_inorder(self, k):
        if not 1 <= k <= self.n:
            raise NotFoundError(f"inorder rank {k} outside [1, {self.n}]")
        t = self.tree
        v = self.variant
        if v is Variant.T1:
            return t.node_select("postorder", k)
        if v is Variant.T2:
            return t.node_select("postorder-right", k)
        if v is Variant.T3:
            return t.node_select("preorder-right", k + 1)
        return t.node_select("preorder", k + 1)

    def select_order(self, k):
        """Inverse of :meth:`order_rank`."""
        if not 1 <= k <= self.n:
            raise NotFoundError(f"rank {k} outside [1, {self.n}]")
        t = self.tree
        v = self.variant
        if v is Variant.T1:
            return t.node_select("preorder", k + 1)
        if v is Variant.T2:
            return t.node_select("preorder-right", k + 1)
        if v is Variant.T3:
            return t.node_select("postorder-right", k)
        return t.node_select("postorder", k)


def build(t, variant=Variant.T1):
    """Succinct encoding of a linked binary tree, a Zaks string or a BP string.

    Strings are read as Zaks sequences when their length is odd and as BP
    sequences of the given variant otherwise.
    """
    if isinstance(t, reference.LinkedBinaryTree):
        return SuccinctBinaryTree.from_linked(t, variant)
    if isinstance(t, str) and len(t) % 2:
        sbt = SuccinctBinaryTree.from_zaks(t)
        if Variant.parse(variant) is Variant.T1:
            return sbt
        return SuccinctBinaryTree.from_linked(sbt.to_linked(), variant)
    return SuccinctBinaryTree(t, variant)
