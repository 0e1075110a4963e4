"""Step fuzzy sets: membership functions built from nested upper-set cuts.

A StepFuzzy value assigns each point the largest level alpha whose cut
contains it.  Addition is the sup-min convolution, which works out to a
levelwise Minkowski sum of the cuts, and crisp sets embed as characteristic
functions.  When the top membership value p stays below 1 the whole cornet
loses its Archimedean elements.
"""

from fractions import Fraction as F

from cornets import (
    NoArchimedeanElements,
    Wedge,
    chi_embed,
    discrete,
    fuzzy_arch_family,
    is_n_quasiconcave,
    leq_fuzzy,
    level_cut,
    msum,
    odot,
    oplus,
    StepFuzzy,
    support,
)

w = Wedge.orthant(1)

print("== sup-min convolution on step functions ==")
f = chi_embed(discrete(w, [(2,)]))  # characteristic function of [2, oo)
g = StepFuzzy.make(
    w, 1, [(F(1), discrete(w, [(1,)])), (F(1, 2), discrete(w, [(0,)]))]
)
h = oplus(f, g)
for alpha, cut in h.levels:
    print(f"  level {alpha}: cut generated by {cut.generators}")

print("\n== the embedding of crisp sets is a homomorphism ==")
A = discrete(w, [(0,)])
B = discrete(w, [(3,)])
lhs = oplus(chi_embed(A), chi_embed(B))
rhs = chi_embed(msum(A, B))
print("chi(A) (+) chi(B) == chi(A (+) B):", lhs == rhs)

print("\n== scaling acts on every cut at once ==")
two_g = odot(2, g)
for alpha, cut in two_g.levels:
    print(f"  level {alpha}: cut generated by {cut.generators}")

print("\n== pointwise order and supports ==")
print("g <= chi([0, oo)):", leq_fuzzy(g, chi_embed(A)))
print("support of g:", support(g).generators)
print("cut of g at 3/4:", level_cut(g, F(3, 4)).generators)

print("\n== quasiconcavity can fail for disconnected membership ==")
wz = Wedge.zero(1)
split = StepFuzzy.make(wz, 1, [(F(1), discrete(wz, [(0,), (2,)]))])
print("chi({0} u [2, oo)) 2-quasiconcave:", is_n_quasiconcave(split, 2))

print("\n== no Archimedean elements below full membership ==")
try:
    fuzzy_arch_family(w, [F(1)], p=F(1, 2))
except NoArchimedeanElements as exc:
    print("p = 1/2 family rejected:", exc)
