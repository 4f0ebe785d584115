"""Excess searches on a balanced parenthesis sequence."""
from succinct_trees import build_paren

s = "((()())(()))"
bp = build_paren(s)
print(s)
print("".join(str(bp.excess(i) % 10) for i in range(len(s))), "<- excess")

# matching parentheses
print("find_close(1) =", bp.find_close(1))
print("find_open(6)  =", bp.find_open(6))

# the pair that directly encloses position 2
print("enclose(2)    =", bp.enclose(2))

# first position right of 0 where excess drops to 1
print("fwd_excess_search(0, 1) =", bp.fwd_excess_search(0, 1))

# leftmost minimum of excess in a window
print("min_excess_pos(2, 9) =", bp.min_excess_pos(2, 9))
