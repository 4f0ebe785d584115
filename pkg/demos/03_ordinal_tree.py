"""Navigating an ordinal tree stored as balanced parentheses."""
from succinct_trees import OrdinalTree

# root with children a(b, c) and d
t = OrdinalTree("((()())())")
r = t.root()
kids = list(t.children(r))
print("root", r, "children", kids, "degree", t.degree(r))

a = kids[0]
b, c = t.children(a)
print("depth of c", t.depth(c), "parent of c", t.parent(c))
print("lca(b, d) =", t.lca(b, kids[1]))
print("subtree of a has", t.subtree_size_excl(a), "nodes below it")

# the four traversal ranks of every node
for x in [r, a, b, c, kids[1]]:
    print("node@%d pre %d post %d pre-right %d post-right %d"
          % (x, t.preorder(x), t.postorder(x), t.preorder_right(x), t.postorder_right(x)))
