"""Ordinal (ordered, arbitrary-degree) trees over a BP sequence.

A node is identified by the position of its opening parenthesis.  The root
sits at position 0 and has depth 0.  Ranks are 1-based.
"""

import operator
from enum import Enum

from .bp import ParenSupport
from .errors import EmptyTreeError, InvalidNodeError, MalformedEncodingError, NotFoundError


class Order(str, Enum):
    PREORDER = "preorder"
    POSTORDER = "postorder"
    PREORDER_RIGHT = "preorder-right"
    POSTORDER_RIGHT = "postorder-right"


class OrdinalTree:
    """Navigation over a single-rooted balanced parenthesis sequence.

    Accepts either a :class:`ParenSupport` or anything it can be built from.
    """

    def __init__(self, parens):
        sup = parens if isinstance(parens, ParenSupport) else ParenSupport(parens)
        n = len(sup)
        if n and sup._find_close(0) != n - 1:
            raise MalformedEncodingError(
                "sequence encodes a forest, not a single tree", sup._find_close(0) + 1)
        self.support = sup
        self.n_nodes = n // 2
        self._data = sup._data
        self._len = n

    def __len__(self):
        return self.n_nodes

    def __repr__(self):
        return f"OrdinalTree({self.support!r})"

    def to_string(self):
        return self.support.to_string()

    # -- handle checks -----------------------------------------------------

    def _is_open(self, p):
        return self._data[p >> 3] >> (p & 7) & 1

    def _node(self, x):
        if type(x) is not int:
            try:
                x = operator.index(x)
            except TypeError:
                raise InvalidNodeError(f"{x!r} is not a node handle") from None
        if not (0 <= x < self._len and self._is_open(x)):
            raise InvalidNodeError(f"{x!r} is not a node of this tree")
        return x

    def is_node(self, x):
        try:
            self._node(x)
        except InvalidNodeError:
            return False
        return True

    # -- navigation --------------------------------------------------------

    def root(self):
        if not self._len:
            raise EmptyTreeError("tree has no nodes")
        return 0

    def parent(self, x):
        return self.support._enclose(self._node(x))

    def first_child(self, x):
        x = self._node(x)
        return x + 1 if self._is_open(x + 1) else None

    def last_child(self, x):
        x = self._node(x)
        if not self._is_open(x + 1):
            return None
        sup = self.support
        return sup._find_open(sup._find_close(x) - 1)

    def child(self, x, i):
        """The i-th child (1-based) of x, or None."""
        if i < 1:
            raise ValueError("child index is 1-based")
        c = self.first_child(x)
        while c is not None and i > 1:
            c = self._next_sibling(c)
            i -= 1
        return c

    def _next_sibling(self, x):
        c = self.support._find_close(x) + 1
        return c if c < self._len and self._is_open(c) else None

    def next_sibling(self, x):
        return self._next_sibling(self._node(x))

    def prev_sibling(self, x):
        x = self._node(x)
        if x == 0 or self._is_open(x - 1):
            return None
        return self.support._find_open(x - 1)

    def children(self, x):
        c = self.first_child(x)
        while c is not None:
            yield c
            c = self._next_sibling(c)

    def degree(self, x):
        return sum(1 for _ in self.children(x))

    def is_leaf(self, x):
        x = self._node(x)
        return not self._is_open(x + 1)

    def depth(self, x):
        return self.support._excess(self._node(x)) - 1

    def subtree_size_excl(self, x):
        """Number of proper descendants of x."""
        x = self._node(x)
        return (self.support._find_close(x) - x - 1) // 2

    def leftmost_leaf(self, x):
        x = self._node(x)
        bits = self.support.bits
        # first close after x ends the leftmost leaf
        return bits._select(0, x + 1 - bits._rank1(x) + 1) - 1

    def rightmost_leaf(self, x):
        sup = self.support
        close = sup._find_close(self._node(x))
        return sup.bits._select(1, sup.bits._rank1(close))

    def is_ancestor(self, x, y):
        """True if x is y or a proper ancestor of y."""
        x, y = self._node(x), self._node(y)
        return x <= y <= self.support._find_close(x)

    def lca(self, x, y):
        x = self._node(x)
        y = self._node(y)
        if x > y:
            x, y = y, x
        sup = self.support
        if x == y or y < sup._find_close(x):
            return x
        m = sup.min_excess_pos(x, y)
        return sup._enclose(m + 1)

    def ancestor_at_depth(self, x, d):
        """The ancestor of x whose depth is d (absolute, root = 0)."""
        dx = self.depth(x)
        if not 0 <= d <= dx:
            raise IndexError(f"depth {d} outside [0, {dx}]")
        if d == dx:
            return x
        if d == 0:
            return 0
        # last position before x at excess d precedes the ancestor's open
        return self.support._bwd(x - 1, d) + 1

    def level_ancestor(self, x, i):
        """Ancestor i levels above x (i = 0 gives x)."""
        return self.ancestor_at_depth(x, self.depth(x) - i)

    # -- orders ------------------------------------------------------------

    def node_rank(self, order, x):
        order = Order(order)
        x = self._node(x)
        bits = self.support.bits
        if order is Order.PREORDER:
            return bits._rank1(x)
        if order is Order.POSTORDER_RIGHT:
            return self.n_nodes - bits._rank1(x) + 1
        post = self.support._find_close(x) + 1 - bits._rank1(self.support._find_close(x))
        if order is Order.POSTORDER:
            return post
        return self.n_nodes - post + 1

    def node_select(self, order, j):
        order = Order(order)
        if not 1 <= j <= self.n_nodes:
            raise NotFoundError(f"rank {j} outside [1, {self.n_nodes}]")
        bits = self.support.bits
        if order is Order.PREORDER_RIGHT:
            order, j = Order.POSTORDER, self.n_nodes - j + 1
        elif order is Order.POSTORDER_RIGHT:
            order, j = Order.PREORDER, self.n_nodes - j + 1
        if order is Order.PREORDER:
            return bits._select(1, j)
        return self.support._find_open(bits._select(0, j))

    def preorder(self, x):
        return self.node_rank(Order.PREORDER, x)

    def postorder(self, x):
        return self.node_rank(Order.POSTORDER, x)

    def preorder_right(self, x):
        return self.node_rank(Order.PREORDER_RIGHT, x)

    def postorder_right(self, x):
        return self.node_rank(Order.POSTORDER_RIGHT, x)
