"""Binary-tree queries answered straight from the parentheses."""
from succinct_trees import SuccinctBinaryTree
from succinct_trees import reference as R

t = R.random_binary_tree(20, 3)
for v in R.Variant:
    s = SuccinctBinaryTree.from_linked(t, v)
    root = s.root_b()
    print("%s  %s" % (v.name, s.bp_string()))
    print("   root size %d, left %s, right %s"
          % (s.subtree_size_b(root), s.left_child(root), s.right_child(root)))

# node handles are positions; inorder ranks are a stable way to name nodes
s = SuccinctBinaryTree.from_linked(t, R.Variant.T4)
u, w = s.select_inorder(4), s.select_inorder(11)
print("lca of inorder 4 and 11 has inorder rank", s.inorder_rank(s.lca_b(u, w)))

# size: 2(n+1) bits plus the directories
print("encoding %d bits, index %d bits" % (s.encoding_bits(), s.index_bits()))
