"""Elements of Q^d ordered by a polyhedral wedge.

A wedge W is a pointed cone; it orders the space by x <= y iff y - x lies in
W.  With the star action equal to iterated addition this is the simplest
cornet, and interior elements admit exact Archimedean thresholds.
"""

from fractions import Fraction as F

from cornets import (
    Wedge,
    check_cornet_laws,
    elem_arch_family,
    interior_archimedean,
    make_elem_cornet,
    wbounded_check,
)

w = Wedge.orthant(2)
inst = make_elem_cornet(w)

print("== the coordinatewise order on Q^2 ==")
x, y = (F(1), F(2)), (F(3, 2), F(2))
print(f"{x} <= {y}:", inst.leq(x, y))
print(f"{y} <= {x}:", inst.leq(y, x))

print("\n== star equals iterated addition here ==")
print("3 * x  =", inst.star(3, x))
print("3 . x  =", inst.dot(3, x))

print("\n== exact Archimedean threshold for an interior element ==")
a = (F(1), F(1, 2))
probe = (F(-5), F(-7))
rec = interior_archimedean(w, a, [probe])
print(f"0 <= {probe} + n*{a} for all n >= {rec.details['n0'][0]} ({rec.verdict.value})")

print("\n== boundedness against a family member ==")
rec = wbounded_check(w, (F(7), F(3)), (F(1), F(2)))
print("x <= n*a from n0 =", rec.details["n0"])

print("\n== the cornet laws on 200 sampled cases ==")
reports = check_cornet_laws(inst, seed=0, cases=200)
print("all pass:", all(r.passed for r in reports))

print("\n== a family of shrinking interior elements ==")
fam = elem_arch_family(w, [F(1), F(1, 2), F(1, 4)])
for a in fam.elements:
    b = fam.witness(a)
    print(f"member {a}, halving witness {b} (b+b <= a: {inst.leq(inst.add(b, b), a)})")
