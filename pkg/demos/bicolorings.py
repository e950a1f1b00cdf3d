"""
Bi-colorings of finite products
===============================

Count the monotone 0/1 maps on m x n and rebuild the sum order each one
describes.
"""

from math import comb

from ordsum.bicolor import enumerate_bicolorings, realize

# counts match the number of ways to interleave m and n points
for m, n in [(1, 1), (1, 2), (2, 2), (3, 4), (6, 6)]:
    count, _ = enumerate_bicolorings(m, n)
    print(f"{m} x {n}: {count} colorings, binomial {comb(m + n, n)}")

# each coloring fixes one interleaving of a0 < a1 and b0 < b1
_, colorings = enumerate_bicolorings(2, 2)
for c in colorings:
    order = " < ".join(f"{side}{i}" for side, i in realize(c))
    print(c.rows, "->", order)
