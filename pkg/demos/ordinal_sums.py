"""
Five ways to add two ordinals
=============================

Compare the natural, lcm, dynamic, min and finite-split sums, then list
every order type a sum of two ordinals can take.
"""

from ordsum.instances import check_bounds, enumerate_instances
from ordsum.ordinal import SUMS, carruth_check, lcm_merge_labels, lcm_sum
from ordsum.syntax import parse_ordinal as O

# a pair with a shared leading power and distinct tails
a, b = O("w^2*3 + w*2"), O("w^2*2 + w*4")
for name, op in sorted(SUMS.items()):
    print(f"{name:>6}: {a}  with  {b}  ->  {op(a, b)}")

# instance types of w + 1 and w + 2, bracketed by the min sum and the natural sum
for pair in [("w", "w"), ("w + 1", "w + 2"), ("w^2", "w")]:
    x, y = O(pair[0]), O(pair[1])
    types = ", ".join(str(g) for g in enumerate_instances(x, y))
    print(f"\n{x} and {y}: {types}")
    print(check_bounds(x, y))

# the lcm sum is not monotone; carruth_check names the witness
print("\n", carruth_check(lcm_sum, [O("w"), O("w*2"), O("w*3")]))

# merging three copies of w two ways gives different label patterns
print("left :", "".join(lcm_merge_labels("left", 12)))
print("right:", "".join(lcm_merge_labels("right", 12)))
