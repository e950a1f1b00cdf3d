"""
Classes of orders and simple sums
=================================

Split terms by a class, build the simple sum over it, and probe the lattice
of classes with small memberships.
"""

from ordsum.orderterm import sum_h
from ordsum.sgc import (
    GEN_OMEGA_Q, GEN_Q, SCATTERED, W, WSTAR, Plus, Times, commutativity_witness, decompose, involution, membership,
    principal, simple_sum,
)
from ordsum.sift import hessenberg_scheme_for, sifted_sum
from ordsum.syntax import parse_expr as T

# longest initial segment in the class, then the rest
for cls, text in [(W, "w*2 + Q + 5"), (SCATTERED, "w + rev(w) + Q(2) + 1"), (principal(1), "w^2 + w + 1")]:
    d = decompose(cls, T(text))
    print(f"{cls}: {text}  ->  {d.left}  |  {d.right}")

# the simple sum slides the left summand past the class part of the right one
x, y = commutativity_witness(W)
print(f"\nW: {x} then {y} -> {simple_sum(W, x, y)}, swapped -> {simple_sum(W, y, x)}")

# involutions compose like a Klein group
print("dual(W) =", involution("dual", W), "; perp(dual(W)) =", involution("perp", involution("dual", W)))

# meets and joins: 2 + Q sits in W* . (W + genQ) but not in genwQ
two_q = T("2 + Q")
print(f"\n2 + Q in times(W*, plus(W, genQ)): {membership(Times(WSTAR, Plus(W, GEN_Q)), two_q)}")
print(f"2 + Q in genwQ: {membership(GEN_OMEGA_Q, two_q)}")

# w* + w is scattered with no maximum, so it already lies in S . W*
z = T("rev(w) + w")
print(f"w* + w in times(S, W*): {membership(Times(SCATTERED, WSTAR), z)}")
print(f"w* + w in plus(P(w), times(S, W*)): {membership(Plus(principal(1), Times(SCATTERED, WSTAR)), z)}")

# sifting level by level reproduces the prefix natural sum
a, b = T("w^2 + Q"), T("w*3 + Q(2)")
print(f"\nsifted: {sifted_sum(hessenberg_scheme_for(a, b), a, b)}   prefix natural sum: {sum_h(a, b)}")
