"""Finitely generated upper sets under Minkowski addition.

Generators plus the wedge describe an upper set; the discrete form keeps the
generators as isolated tips, the polytopic form first takes their convex
hull.  Addition is the Minkowski sum, star scales the set, and both forms
are kept canonical so that equality of values is equality of sets.
"""

from fractions import Fraction as F

from cornets import (
    Repr,
    Wedge,
    convex_hull,
    discrete,
    intersect,
    is_n_convex_set,
    msum,
    phi_embed,
    polytopic,
    star_set,
    subset,
)

w = Wedge.orthant(2)

print("== Minkowski sum of two staircases ==")
A = discrete(w, [(0, 1), (1, 0)])
S = msum(A, A)
print("A       generators:", A.generators)
print("A (+) A generators:", S.generators)

print("\n== star is not iterated addition on sets ==")
B = discrete(Wedge.zero(1), [(0,), (1,)])  # the plain finite set {0, 1}
print("2 * B generators:", star_set(2, B).generators)
print("B+B   generators:", msum(B, B).generators)

print("\n== canonical forms make equality semantic ==")
C = discrete(w, [(0, 1), (1, 0), (2, 2)])  # (2,2) is dominated
print("redundant generator dropped:", C.generators == A.generators)
P = polytopic(w, [(0, 4), (2, 2), (1, 1), (4, 0)])  # (2,2) above the hull
print("polytopic lower chain:", P.generators)

print("\n== convexity of a set is a real question ==")
print("A 2-convex:", is_n_convex_set(A, 2))
print("conv(A) generators:", convex_hull(A).generators)
print("conv(A) 2-convex:", is_n_convex_set(convex_hull(A), 2))

print("\n== order embedding of elements as principal upper sets ==")
x, y = (F(1), F(2)), (F(3, 2), F(2))
print("x <= y elementwise:", w.leq(x, y))
print("phi(y) subset of phi(x):", subset(phi_embed(w, y), phi_embed(w, x)))

print("\n== intersections stay finitely generated over the orthant ==")
D = discrete(w, [(0, 3), (3, 0)])
print("A meet D generators:", intersect(A, D).generators)
