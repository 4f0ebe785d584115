"""Pointer-based trees used for construction and as ground truth.

Trees here are plain arrays of node records.  A binary tree with ``n`` nodes
stores ``left[k]`` and ``right[k]`` (``-1`` when absent) for node ``k``.  An
ordinal tree stores its ordered child lists in compressed form: the children
of node ``v`` are ``children[ptr[v]:ptr[v+1]]`` and node 0 is the root.

Everything in this module is deliberately simple: depth-first traversals with
explicit stacks, run under numba so that the large property corpora stay
cheap.  Nothing here is used on the query path of the succinct structures.
"""

from enum import IntEnum

import numpy as np
from numba import njit

from .errors import MalformedEncodingError

NONE = -1


class Variant(IntEnum):
    """The four binary-to-ordinal transformations.

    ========  ====================  ======================
    variant   left child becomes    right child becomes
    ========  ====================  ======================
    T1        first child           next sibling
    T2        last child            previous sibling
    T3        next sibling          first child
    T4        previous sibling      last child
    ========  ====================  ======================
    """

    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4

    @classmethod
    def parse(cls, v):
        if isinstance(v, cls):
            return v
        if isinstance(v, str):
            key = v.strip().upper()
            if not key.startswith("T"):
                key = "T" + key
            try:
                return cls[key]
            except KeyError:
                raise ValueError(f"unknown variant {v!r}") from None
        return cls(int(v))


# -- tree records -------------------------------------------------------------


class LinkedBinaryTree:
    """Binary tree as ``left``/``right`` child arrays plus a root id."""

    __slots__ = ("left", "right", "root")

    def __init__(self, left, right, root):
        self.left = np.ascontiguousarray(left, dtype=np.int64)
        self.right = np.ascontiguousarray(right, dtype=np.int64)
        self.root = int(root)
        if self.left.shape != self.right.shape:
            raise ValueError("left and right arrays differ in length")
        if (self.root == NONE) != (self.left.size == 0):
            raise ValueError("root must be -1 exactly when the tree is empty")

    @property
    def n(self):
        return self.left.size

    def __len__(self):
        return self.left.size

    def __repr__(self):
        return f"LinkedBinaryTree(n={self.n}, zaks={zaks(self) if self.n <= 20 else '...'})"

    def __eq__(self, other):
        # same shape, regardless of node labels
        if not isinstance(other, LinkedBinaryTree):
            return NotImplemented
        return zaks(self) == zaks(other)

    @classmethod
    def empty(cls):
        return cls(np.zeros(0, np.int64), np.zeros(0, np.int64), NONE)

    @classmethod
    def from_nested(cls, shape):
        """Build from nested ``(left, right)`` tuples; ``None`` is no child.

        Nodes are numbered in preorder, so ``((None, None), (None, None))``
        is a root 0 with left child 1 and right child 2.
        """
        left, right = [], []

        def visit(node):
            if node is None:
                return NONE
            me = len(left)
            left.append(NONE)
            right.append(NONE)
            lt, rt = node
            left[me] = visit(lt)
            right[me] = visit(rt)
            return me

        root = visit(shape)
        return cls(np.array(left, np.int64), np.array(right, np.int64), root)

    def to_nested(self):
        def visit(k):
            if k == NONE:
                return None
            return (visit(int(self.left[k])), visit(int(self.right[k])))

        return visit(self.root)

    def relabel(self, perm):
        """Return the same shape with node ``k`` renamed ``perm[k]``."""
        perm = np.asarray(perm, dtype=np.int64)
        n = self.n
        left = np.full(n, NONE, np.int64)
        right = np.full(n, NONE, np.int64)
        lk = self.left >= 0
        rk = self.right >= 0
        left[perm] = np.where(lk, perm[np.where(lk, self.left, 0)], NONE)
        right[perm] = np.where(rk, perm[np.where(rk, self.right, 0)], NONE)
        return LinkedBinaryTree(left, right, perm[self.root] if n else NONE)

    def validate(self):
        """Raise unless every node is reachable from the root exactly once."""
        n = self.n
        if n == 0:
            return
        kids = np.concatenate([self.left, self.right])
        kids = kids[kids != NONE]
        if kids.size and (kids.min() < 0 or kids.max() >= n):
            raise MalformedEncodingError("child reference out of range")
        indeg = np.bincount(kids, minlength=n)
        if indeg.max(initial=0) > 1 or indeg[self.root] != 0:
            raise MalformedEncodingError("a node has more than one parent")
        if _reachable(self.left, self.right, self.root) != n:
            raise MalformedEncodingError("some nodes are not reachable from the root")


class LinkedOrdinalTree:
    """Ordinal tree as compressed ordered child lists; node 0 is the root.

    ``dummy_root`` marks trees produced by a transformation, whose root does
    not stand for any binary node.
    """

    __slots__ = ("ptr", "children", "dummy_root", "_parent")

    def __init__(self, ptr, children, dummy_root=False):
        self.ptr = np.ascontiguousarray(ptr, dtype=np.int64)
        self.children = np.ascontiguousarray(children, dtype=np.int64)
        self.dummy_root = dummy_root
        self._parent = None

    @property
    def n_nodes(self):
        return self.ptr.size - 1

    def __len__(self):
        return self.ptr.size - 1

    def __repr__(self):
        body = encode_bp(self) if self.n_nodes <= 32 else "..."
        return f"LinkedOrdinalTree(n_nodes={self.n_nodes}, bp={body})"

    def child_list(self, v):
        return self.children[self.ptr[v]:self.ptr[v + 1]].tolist()

    def degree(self, v):
        return int(self.ptr[v + 1] - self.ptr[v])

    @property
    def parent(self):
        if self._parent is None:
            par = np.full(self.n_nodes, NONE, np.int64)
            par[self.children] = np.repeat(np.arange(self.n_nodes), np.diff(self.ptr))
            self._parent = par
        return self._parent

    @classmethod
    def from_child_lists(cls, lists, dummy_root=False):
        """Build from ``lists[v]`` = ordered children of node ``v``."""
        deg = np.array([len(c) for c in lists], np.int64)
        ptr = np.zeros(len(lists) + 1, np.int64)
        np.cumsum(deg, out=ptr[1:])
        flat = np.array([c for cs in lists for c in cs], np.int64)
        return cls(ptr, flat, dummy_root)


# -- numba kernels ------------------------------------------------------------


@njit(cache=True)
def _reachable(left, right, root):
    # assumes every node has at most one parent, so no node is pushed twice
    n = left.size
    stack = np.empty(n + 1, np.int64)
    top = 0
    stack[0] = root
    count = 0
    while top >= 0:
        x = stack[top]
        top -= 1
        count += 1
        if right[x] >= 0:
            top += 1
            stack[top] = right[x]
        if left[x] >= 0:
            top += 1
            stack[top] = left[x]
    return count


@njit(cache=True)
def _transform_kernel(left, right, root, variant):
    n = left.size
    first = left if variant <= 2 else right
    step = right if variant <= 2 else left
    reverse = variant == 2 or variant == 4
    deg = np.zeros(n + 1, np.int64)
    for v in range(n + 1):
        c = root if v == 0 else first[v - 1]
        while c != -1:
            deg[v] += 1
            c = step[c]
    ptr = np.zeros(n + 2, np.int64)
    for v in range(n + 1):
        ptr[v + 1] = ptr[v] + deg[v]
    children = np.empty(n, np.int64)
    for v in range(n + 1):
        c = root if v == 0 else first[v - 1]
        k = 0
        while c != -1:
            if reverse:
                children[ptr[v] + deg[v] - 1 - k] = c + 1
            else:
                children[ptr[v] + k] = c + 1
            k += 1
            c = step[c]
    return ptr, children


@njit(cache=True)
def _bp_kernel(ptr, children):
    nn = ptr.size - 1
    out = np.empty(2 * nn, np.uint8)
    openpos = np.empty(nn, np.int64)
    if nn == 0:
        return out, openpos
    node = np.empty(nn, np.int64)
    nxt = np.empty(nn, np.int64)
    top = 0
    node[0] = 0
    nxt[0] = ptr[0]
    out[0] = 1
    openpos[0] = 0
    p = 1
    while top >= 0:
        v = node[top]
        k = nxt[top]
        if k < ptr[v + 1]:
            nxt[top] = k + 1
            c = children[k]
            out[p] = 1
            openpos[c] = p
            p += 1
            top += 1
            node[top] = c
            nxt[top] = ptr[c]
        else:
            out[p] = 0
            p += 1
            top -= 1
    return out, openpos


@njit(cache=True)
def _dfuds_kernel(ptr, children, rtl):
    nn = ptr.size - 1
    out = np.empty(2 * nn, np.uint8)
    if nn == 0:
        return out
    out[0] = 1
    p = 1
    stack = np.empty(nn, np.int64)
    top = 0
    stack[0] = 0
    while top >= 0:
        v = stack[top]
        top -= 1
        lo = ptr[v]
        hi = ptr[v + 1]
        for _ in range(hi - lo):
            out[p] = 1
            p += 1
        out[p] = 0
        p += 1
        # push so that the next child to visit ends on top
        if rtl:
            for k in range(lo, hi):
                top += 1
                stack[top] = children[k]
        else:
            for k in range(hi - 1, lo - 1, -1):
                top += 1
                stack[top] = children[k]
    return out


@njit(cache=True)
def _pods_kernel(ptr, children):
    nn = ptr.size - 1
    out = np.empty(2 * nn, np.uint8)
    if nn == 0:
        return out
    node = np.empty(nn, np.int64)
    nxt = np.empty(nn, np.int64)
    top = 0
    node[0] = 0
    nxt[0] = ptr[0]
    p = 0
    while top >= 0:
        v = node[top]
        k = nxt[top]
        if k < ptr[v + 1]:
            nxt[top] = k + 1
            c = children[k]
            top += 1
            node[top] = c
            nxt[top] = ptr[c]
        else:
            out[p] = 1
            p += 1
            for _ in range(ptr[v + 1] - ptr[v]):
                out[p] = 0
                p += 1
            top -= 1
    out[p] = 0
    return out


@njit(cache=True)
def _zaks_kernel(left, right, root):
    # preorder over the tree extended with external leaves; each stack entry
    # carries the node that follows its subtree in inorder
    n = left.size
    out = np.empty(2 * n + 1, np.uint8)
    open_node = np.empty(n, np.int64)
    close_node = np.empty(n + 1, np.int64)
    st_node = np.empty(n + 2, np.int64)
    st_succ = np.empty(n + 2, np.int64)
    top = 0
    st_node[0] = root
    st_succ[0] = -1
    p = 0
    no = 0
    nc = 0
    while top >= 0:
        x = st_node[top]
        s = st_succ[top]
        top -= 1
        if x == -1:
            out[p] = 0
            close_node[nc] = s
            nc += 1
        else:
            out[p] = 1
            open_node[no] = x
            no += 1
            top += 1
            st_node[top] = right[x]
            st_succ[top] = s
            top += 1
            st_node[top] = left[x]
            st_succ[top] = x
        p += 1
    return out, open_node, close_node


@njit(cache=True)
def _decode_zaks_kernel(seq):
    # returns (left, right, root, status); status 0 = ok
    m = seq.size
    n = 0
    for s in seq:
        n += s
    left = np.full(n, -1, np.int64)
    right = np.full(n, -1, np.int64)
    slot_par = np.empty(n + 2, np.int64)
    slot_side = np.empty(n + 2, np.int64)
    top = 0
    slot_par[0] = -1
    slot_side[0] = 0
    nid = 0
    root = -1
    for i in range(m):
        if top < 0:
            return left, right, root, i + 1
        par = slot_par[top]
        side = slot_side[top]
        top -= 1
        if seq[i] == 1:
            u = nid
            nid += 1
            if par == -1:
                root = u
            elif side == 0:
                left[par] = u
            else:
                right[par] = u
            top += 1
            slot_par[top] = u
            slot_side[top] = 1
            top += 1
            slot_par[top] = u
            slot_side[top] = 0
    if top >= 0:
        return left, right, root, m + 1
    return left, right, root, 0


@njit(cache=True)
def _parent_from_bp(seq):
    m = seq.size
    nn = m // 2
    parent = np.full(nn, -1, np.int64)
    stack = np.empty(nn + 1, np.int64)
    top = -1
    nid = 0
    for i in range(m):
        if seq[i] == 1:
            if nid >= nn:
                return parent, i + 1
            parent[nid] = stack[top] if top >= 0 else -1
            if top < 0 and nid > 0:
                return parent, i + 1
            top += 1
            stack[top] = nid
            nid += 1
        else:
            if top < 0:
                return parent, i + 1
            top -= 1
    if top >= 0 or nid != nn:
        return parent, m + 1
    return parent, 0


@njit(cache=True)
def _parent_from_dfuds(seq):
    # seq includes the leading dummy open
    m = seq.size
    nn = m // 2
    parent = np.full(nn, -1, np.int64)
    st_node = np.empty(nn + 1, np.int64)
    st_left = np.empty(nn + 1, np.int64)
    top = -1
    i = 1
    for v in range(nn):
        if v > 0:
            if top < 0:
                return parent, i + 1
            parent[v] = st_node[top]
            st_left[top] -= 1
            if st_left[top] == 0:
                top -= 1
        d = 0
        while i < m and seq[i] == 1:
            d += 1
            i += 1
        if i >= m:
            return parent, m + 1
        i += 1
        if d > 0:
            top += 1
            st_node[top] = v
            st_left[top] = d
    if i != m or top >= 0:
        return parent, m + 1
    return parent, 0


@njit(cache=True)
def _binary_oracle_kernel(left, right, root):
    n = left.size
    parent = np.full(n, -1, np.int64)
    depth = np.zeros(n, np.int64)
    pre = np.zeros(n, np.int64)
    ino = np.zeros(n, np.int64)
    post = np.zeros(n, np.int64)
    size = np.ones(n, np.int64)
    if n == 0:
        return parent, depth, pre, ino, post, size
    order = np.empty(n, np.int64)
    stack = np.empty(n + 1, np.int64)
    top = 0
    stack[0] = root
    k = 0
    while top >= 0:
        x = stack[top]
        top -= 1
        order[k] = x
        k += 1
        pre[x] = k
        for c in (right[x], left[x]):
            if c >= 0:
                parent[c] = x
                depth[c] = depth[x] + 1
                top += 1
                stack[top] = c
    for j in range(n - 1, 0, -1):
        x = order[j]
        size[parent[x]] += size[x]
    # inorder: walk left spine, emit, then go right
    top = -1
    x = root
    k = 0
    while top >= 0 or x >= 0:
        while x >= 0:
            top += 1
            stack[top] = x
            x = left[x]
        x = stack[top]
        top -= 1
        k += 1
        ino[x] = k
        x = right[x]
    # postorder: reverse of (root, right, left) preorder
    top = 0
    stack[0] = root
    k = n
    while top >= 0:
        x = stack[top]
        top -= 1
        post[x] = k
        k -= 1
        for c in (left[x], right[x]):
            if c >= 0:
                top += 1
                stack[top] = c
    return parent, depth, pre, ino, post, size


@njit(cache=True)
def _ordinal_oracle_kernel(ptr, children):
    nn = ptr.size - 1
    parent = np.full(nn, -1, np.int64)
    depth = np.zeros(nn, np.int64)
    pre = np.zeros(nn, np.int64)
    post = np.zeros(nn, np.int64)
    pre_r = np.zeros(nn, np.int64)
    post_r = np.zeros(nn, np.int64)
    size = np.zeros(nn, np.int64)
    if nn == 0:
        return parent, depth, pre, post, pre_r, post_r, size
    for v in range(nn):
        for k in range(ptr[v], ptr[v + 1]):
            parent[children[k]] = v
    node = np.empty(nn, np.int64)
    nxt = np.empty(nn, np.int64)
    for rtl in (False, True):
        top = 0
        node[0] = 0
        nxt[0] = 0
        a = 1
        b = 0
        if rtl:
            pre_r[0] = 1
        else:
            pre[0] = 1
        while top >= 0:
            v = node[top]
            k = nxt[top]
            deg = ptr[v + 1] - ptr[v]
            if k < deg:
                nxt[top] = k + 1
                c = children[ptr[v + 1] - 1 - k] if rtl else children[ptr[v] + k]
                a += 1
                if rtl:
                    pre_r[c] = a
                else:
                    pre[c] = a
                    depth[c] = depth[v] + 1
                top += 1
                node[top] = c
                nxt[top] = 0
            else:
                b += 1
                if rtl:
                    post_r[v] = b
                else:
                    post[v] = b
                top -= 1
    order = np.argsort(pre)
    for j in range(nn - 1, 0, -1):
        v = order[j]
        size[parent[v]] += size[v] + 1
    return parent, depth, pre, post, pre_r, post_r, size


# -- public operations --------------------------------------------------------


def _to_str(arr):
    return arr.tobytes().translate(bytes.maketrans(b"\x00\x01", b")(")).decode("ascii")


def _to_bits(s):
    if isinstance(s, str):
        raw = np.frombuffer(s.encode("ascii"), np.uint8)
        bad = np.flatnonzero((raw != 40) & (raw != 41))
        if bad.size:
            raise MalformedEncodingError(f"unexpected character at {bad[0]}", int(bad[0]))
        return (raw == 40).astype(np.uint8)
    return np.ascontiguousarray(s, dtype=np.uint8)


def transform(variant, t):
    """Apply transformation ``variant`` to binary tree ``t``.

    Returns ``(ordinal, corr)``: the ordinal tree has ``t.n + 1`` nodes with a
    dummy root 0, and binary node ``k`` becomes ordinal node ``corr[k]``
    (always ``k + 1``).
    """
    v = Variant.parse(variant)
    ptr, children = _transform_kernel(t.left, t.right, t.root, int(v))
    return LinkedOrdinalTree(ptr, children, dummy_root=True), np.arange(1, t.n + 1)


def inverse_transform(variant, o):
    """Recover the binary tree from an ordinal tree built by ``variant``.

    Binary node ``k`` is ordinal node ``k + 1``.
    """
    v = Variant.parse(variant)
    nn = o.n_nodes
    if nn == 0:
        raise MalformedEncodingError("ordinal tree has no dummy root")
    n = nn - 1
    first = np.full(nn, NONE, np.int64)
    last = np.full(nn, NONE, np.int64)
    nxt = np.full(nn, NONE, np.int64)
    prv = np.full(nn, NONE, np.int64)
    deg = np.diff(o.ptr)
    has = deg > 0
    first[has] = o.children[o.ptr[:-1][has]]
    last[has] = o.children[o.ptr[1:][has] - 1]
    same = np.repeat(np.arange(nn), deg)
    if o.children.size > 1:
        cont = same[1:] == same[:-1]
        nxt[o.children[:-1][cont]] = o.children[1:][cont]
        prv[o.children[1:][cont]] = o.children[:-1][cont]
    lmap, rmap = {
        Variant.T1: (first, nxt),
        Variant.T2: (last, prv),
        Variant.T3: (nxt, first),
        Variant.T4: (prv, last),
    }[v]
    left = lmap[1:] - 1
    right = rmap[1:] - 1
    left[lmap[1:] == NONE] = NONE
    right[rmap[1:] == NONE] = NONE
    root = (first if v in (Variant.T1, Variant.T3) else last)[0]
    return LinkedBinaryTree(left, right, root - 1 if root != NONE else NONE)


def encode_bp(t):
    """BP sequence of an ordinal tree, as a ``(``/``)`` string."""
    return _to_str(_bp_kernel(t.ptr, t.children)[0])


def bp_open_positions(t):
    """Position of each node's opening parenthesis in :func:`encode_bp`."""
    return _bp_kernel(t.ptr, t.children)[1]


def encode_dfuds(t):
    """DFUDS sequence (with the leading dummy ``(``), children left to right."""
    return _to_str(_dfuds_kernel(t.ptr, t.children, False))


def encode_dfuds_rtl(t):
    """DFUDS sequence visiting the children of every node right to left."""
    return _to_str(_dfuds_kernel(t.ptr, t.children, True))


def encode_pods(t):
    """Post-order degree sequence: ``(`` then ``)`` per child, plus a final ``)``."""
    return _to_str(_pods_kernel(t.ptr, t.children))


def zaks(t):
    """Zaks' sequence: preorder of the extended tree, ``(`` internal, ``)`` external."""
    return _to_str(_zaks_kernel(t.left, t.right, t.root)[0])


def zaks_correspondence(t):
    """Nodes matched to the parentheses of :func:`zaks`.

    Returns ``(open_nodes, close_nodes)``: the node of each ``(`` in order,
    and for each ``)`` the node that follows that external leaf in inorder
    (``-1`` for the last one).
    """
    _, opens, closes = _zaks_kernel(t.left, t.right, t.root)
    return opens, closes


def decode_zaks(s):
    """Inverse of :func:`zaks`; nodes are numbered in preorder."""
    seq = _to_bits(s)
    if seq.size == 0:
        raise MalformedEncodingError("empty Zaks sequence")
    left, right, root, status = _decode_zaks_kernel(seq)
    if status:
        raise MalformedEncodingError("not a Zaks sequence", int(status) - 1)
    return LinkedBinaryTree(left, right, root)


def _ordinal_from_parent(parent):
    nn = parent.size
    kids = np.arange(1, nn)
    order = np.argsort(parent[1:], kind="stable")
    deg = np.bincount(parent[1:], minlength=nn) if nn > 1 else np.zeros(nn, np.int64)
    ptr = np.zeros(nn + 1, np.int64)
    np.cumsum(deg, out=ptr[1:])
    return LinkedOrdinalTree(ptr, kids[order])


def decode_bp(s):
    """Ordinal tree from a BP string; nodes are numbered in preorder."""
    seq = _to_bits(s)
    if seq.size == 0 or seq.size % 2:
        raise MalformedEncodingError("BP sequence must have even positive length")
    parent, status = _parent_from_bp(seq)
    if status:
        raise MalformedEncodingError("not a single-tree BP sequence", int(status) - 1)
    return _ordinal_from_parent(parent)


def decode_dfuds(s, rtl=False):
    """Ordinal tree from a DFUDS string (``rtl`` for the right-to-left form)."""
    seq = _to_bits(s)
    if seq.size == 0 or seq.size % 2 or seq[0] != 1:
        raise MalformedEncodingError("DFUDS sequence must start with ( and have even length")
    parent, status = _parent_from_dfuds(seq)
    if status:
        raise MalformedEncodingError("not a DFUDS sequence", int(status) - 1)
    o = _ordinal_from_parent(parent)
    if rtl:
        lists = [o.child_list(v)[::-1] for v in range(o.n_nodes)]
        o = LinkedOrdinalTree.from_child_lists(lists)
    return o


# -- oracles ------------------------------------------------------------------


class BinaryOracle:
    """Naive answers for a :class:`LinkedBinaryTree` by direct traversal.

    Ranks are 1-based; ``size`` counts the node itself.
    """

    def __init__(self, t):
        self.tree = t
        (self.parent, self.depth, self.preorder, self.inorder,
         self.postorder, self.size) = _binary_oracle_kernel(t.left, t.right, t.root)
        self.by_inorder = np.empty(t.n + 1, np.int64)
        self.by_inorder[0] = NONE
        self.by_inorder[self.inorder] = np.arange(t.n)

    def left(self, u):
        return int(self.tree.left[u])

    def right(self, u):
        return int(self.tree.right[u])

    def is_ancestor(self, a, u):
        while u != NONE and self.depth[u] > self.depth[a]:
            u = self.parent[u]
        return u == a

    def lca(self, u, v):
        u, v = int(u), int(v)
        while self.depth[u] > self.depth[v]:
            u = int(self.parent[u])
        while self.depth[v] > self.depth[u]:
            v = int(self.parent[v])
        while u != v:
            u, v = int(self.parent[u]), int(self.parent[v])
        return u


def naive_ops(t):
    """Oracle answers (children, parent, sizes, LCA, three orders) for ``t``."""
    return BinaryOracle(t)


class OrdinalOracle:
    """Naive answers for a :class:`LinkedOrdinalTree`.

    The right-to-left orders come from an actual right-to-left traversal.
    """

    def __init__(self, o):
        self.tree = o
        (self.parent, self.depth, self.preorder, self.postorder,
         self.preorder_right, self.postorder_right,
         self.size_excl) = _ordinal_oracle_kernel(o.ptr, o.children)

    def children(self, v):
        return self.tree.child_list(v)

    def child(self, v, i):
        kids = self.children(v)
        return kids[i - 1] if i <= len(kids) else NONE

    def _siblings(self, v):
        p = self.parent[v]
        if p == NONE:
            return [v], 0
        kids = self.children(p)
        return kids, kids.index(v)

    def next_sibling(self, v):
        kids, k = self._siblings(v)
        return kids[k + 1] if k + 1 < len(kids) else NONE

    def prev_sibling(self, v):
        kids, k = self._siblings(v)
        return kids[k - 1] if k > 0 else NONE

    def leftmost_leaf(self, v):
        while self.tree.degree(v):
            v = self.children(v)[0]
        return v

    def rightmost_leaf(self, v):
        while self.tree.degree(v):
            v = self.children(v)[-1]
        return v

    def ancestor_at_depth(self, v, d):
        while self.depth[v] > d:
            v = int(self.parent[v])
        return v

    def lca(self, u, v):
        u, v = int(u), int(v)
        while self.depth[u] > self.depth[v]:
            u = int(self.parent[u])
        while self.depth[v] > self.depth[u]:
            v = int(self.parent[v])
        while u != v:
            u, v = int(self.parent[u]), int(self.parent[v])
        return u


# -- generators ---------------------------------------------------------------


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_zaks_bits(n, seed=None):
    """Uniformly random Zaks sequence (0/1 array) of an ``n``-node binary tree.

    A random arrangement of ``n`` opens and ``n + 1`` closes has exactly one
    cyclic shift in which every proper prefix has at least as many opens as
    closes; that shift is the answer.  All shifts of an arrangement are
    distinct, so every tree is equally likely.
    """
    rng = _rng(seed)
    seq = np.zeros(2 * n + 1, np.uint8)
    seq[:n] = 1
    rng.shuffle(seq)
    pref = np.cumsum(seq.astype(np.int64) * 2 - 1)
    cut = int(np.argmin(pref)) + 1
    return np.concatenate([seq[cut:], seq[:cut]])


def random_binary_tree(n, seed=None):
    """Uniform random binary tree shape with ``n`` nodes, randomly labelled."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = _rng(seed)
    if n == 0:
        return LinkedBinaryTree.empty()
    t = decode_zaks(random_zaks_bits(n, rng))
    return t.relabel(rng.permutation(n))


def random_ordinal_tree(n_nodes, seed=None):
    """Uniform random ordinal tree with ``n_nodes`` nodes (at least 1)."""
    if n_nodes < 1:
        raise ValueError("an ordinal tree has at least one node")
    o, _ = transform(Variant.T1, random_binary_tree(n_nodes - 1, seed))
    return LinkedOrdinalTree(o.ptr, o.children)


def naive_cartesian(a):
    """Cartesian tree of ``a`` straight from the recursive definition.

    Node ``k`` stands for ``a[k]``; the root of every sub-range is its
    leftmost minimum, so equal values hang to the right.
    """
    a = np.asarray(a)
    n = a.size
    left = np.full(n, NONE, np.int64)
    right = np.full(n, NONE, np.int64)
    if n == 0:
        return LinkedBinaryTree.empty()
    root = int(np.argmin(a))
    todo = [(0, root - 1, root, 0), (root + 1, n - 1, root, 1)]
    while todo:
        lo, hi, par, side = todo.pop()
        if lo > hi:
            continue
        m = lo + int(np.argmin(a[lo:hi + 1]))
        if side == 0:
            left[par] = m
        else:
            right[par] = m
        todo.append((lo, m - 1, m, 0))
        todo.append((m + 1, hi, m, 1))
    return LinkedBinaryTree(left, right, root)
