"""Finitely generated W-invariant upper sets and their cornet.

An UpperSet denotes either F + W (DISCRETE) or conv(F) + W (POLYTOPIC) for a
finite generator list F.  Generators are kept in canonical antichain form so
that syntactic equality of values is semantic equality of denotations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .core import ArchFamily, CornetInstance
from .geometry import (
    Vec,
    divide,
    join_orthant,
    lp_feasible,
    rat,
    vadd,
    vdot,
    vscale,
    vsub,
    vzero,
)
from .wedges import Wedge


class Repr(Enum):
    DISCRETE = "discrete"
    POLYTOPIC = "polytopic"


class WedgeMismatch(ValueError):
    pass


class UnsupportedOperation(ValueError):
    pass


class MultisetCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class UpperSet:
    wedge: Wedge
    repr: Repr
    generators: tuple[Vec, ...]

    @staticmethod
    def make(wedge: Wedge, repr: Repr, generators: Iterable[Iterable]) -> "UpperSet":
        gens = tuple(tuple(rat(c) for c in g) for g in generators)
        if not gens:
            raise ValueError("generator list must be nonempty")
        for g in gens:
            if len(g) != wedge.dim:
                raise ValueError(f"generator dim {len(g)} vs wedge dim {wedge.dim}")
        return UpperSet(wedge, repr, _canonicalize(wedge, repr, gens))

    def member(self, p: Vec) -> bool:
        return _member(self, p)


def discrete(wedge: Wedge, generators: Iterable[Iterable]) -> UpperSet:
    return UpperSet.make(wedge, Repr.DISCRETE, generators)


def polytopic(wedge: Wedge, generators: Iterable[Iterable]) -> UpperSet:
    return UpperSet.make(wedge, Repr.POLYTOPIC, generators)


def _canonicalize(w: Wedge, rp: Repr, gens: tuple[Vec, ...]) -> tuple[Vec, ...]:
    gens = tuple(sorted(set(gens)))
    if rp is Repr.DISCRETE:
        if w.is_zero:
            return gens  # no dominations beyond exact duplicates
        if w.is_orthant:
            kept = [
                g
                for g in gens
                if not any(
                    h != g and all(hc <= gc for hc, gc in zip(h, g)) for h in gens
                )
            ]
            return tuple(kept)
        kept = [
            g
            for g in gens
            if not any(h != g and w.contains(vsub(g, h)) for h in gens)
        ]
        return tuple(kept)
    # POLYTOPIC: drop generators inside the hull of the others.
    if w.dim == 1:
        return _canon_poly_1d(w, gens)
    if w.is_orthant and w.dim == 2:
        return _pareto_lower_hull(gens)
    kept = list(gens)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for i, g in enumerate(kept):
            others = kept[:i] + kept[i + 1 :]
            if _poly_member_lp(w, others, g):
                kept.pop(i)
                changed = True
                break
    return tuple(sorted(kept))


def _canon_poly_1d(w: Wedge, gens: tuple[Vec, ...]) -> tuple[Vec, ...]:
    lo = min(gens)
    hi = max(gens)
    up = w.contains((Fraction(1),))
    down = w.contains((Fraction(-1),))
    if up and not down:
        return (lo,)
    if down and not up:
        return (hi,)
    return (lo,) if lo == hi else (lo, hi)


def _pareto_lower_hull(points: Sequence[Vec]) -> tuple[Vec, ...]:
    """Vertices of conv(points) + R^2_{>=0}: the Pareto-minimal points that
    sit strictly below every chord; a monotone-chain lower hull."""
    pts = sorted(set(points))
    minimal = [
        p
        for p in pts
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts)
    ]
    minimal.sort()  # x ascending; y strictly descending on an antichain
    hull: list[Vec] = []
    for p in minimal:
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return tuple(hull)


def _poly_member_lp(w: Wedge, gens: Sequence[Vec], p: Vec) -> bool:
    """p in conv(gens) + W via exact feasibility in the convex multipliers."""
    k = len(gens)
    ineqs = []
    for i in range(k):  # lambda_i >= 0
        coeffs = tuple(Fraction(1 if j == i else 0) for j in range(k))
        ineqs.append((coeffs, Fraction(0)))
    ones = (Fraction(1),) * k
    ineqs.append((ones, Fraction(-1)))  # sum >= 1
    ineqs.append((tuple(-c for c in ones), Fraction(1)))  # sum <= 1
    for m in w.cone.rows:
        coeffs = tuple(-vdot(m, g) for g in gens)
        ineqs.append((coeffs, vdot(m, p)))
    return lp_feasible(ineqs, k) is not None


def _member(A: UpperSet, p: Vec) -> bool:
    w = A.wedge
    if A.repr is Repr.DISCRETE:
        if w.is_zero:
            return p in A.generators
        if w.is_orthant:
            return any(
                all(pc >= gc for pc, gc in zip(p, g)) for g in A.generators
            )
        return any(w.contains(vsub(p, g)) for g in A.generators)
    if w.dim == 1:
        if len(A.generators) == 1:
            return w.contains(vsub(p, A.generators[0]))
        lo, hi = A.generators  # canonical interval over the zero wedge
        return lo[0] <= p[0] <= hi[0]
    if w.is_orthant and w.dim == 2:
        return _member_chain(A.generators, p)
    return _poly_member_lp(w, A.generators, p)


def _member_chain(chain: Sequence[Vec], p: Vec) -> bool:
    """Membership in conv(chain) + orthant for a canonical 2-d chain."""
    x, y = p
    if x < chain[0][0]:
        return False
    if y < chain[-1][1]:
        return False
    if x >= chain[-1][0]:
        return True  # already checked y >= last vertex's y
    for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
        if x1 <= x <= x2:
            # boundary height at x on the chord
            return (y - y1) * (x2 - x1) >= (y2 - y1) * (x - x1)
    return False


def msum(A: UpperSet, B: UpperSet) -> UpperSet:
    """Minkowski sum; mixed representations promote to POLYTOPIC."""
    if A.wedge != B.wedge:
        raise WedgeMismatch("operands live over different wedges")
    rp = Repr.POLYTOPIC if Repr.POLYTOPIC in (A.repr, B.repr) else Repr.DISCRETE
    gens = [vadd(a, b) for a in A.generators for b in B.generators]
    return UpperSet.make(A.wedge, rp, gens)


def star_set(n: int, A: UpperSet) -> UpperSet:
    """n*A = {n.a + w}; over a divisible wedge this is n.F + W exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return UpperSet.make(A.wedge, A.repr, [vscale(n, g) for g in A.generators])


def subset(A: UpperSet, B: UpperSet) -> bool:
    """Inclusion of denotations, decided by generator membership.

    Sound when A is DISCRETE (denotation is a union of translated wedges) or
    when B is POLYTOPIC (denotation is convex); the one unsound combination
    is rejected.
    """
    if A.wedge != B.wedge:
        raise WedgeMismatch("operands live over different wedges")
    if A.repr is Repr.POLYTOPIC and B.repr is Repr.DISCRETE:
        if A.wedge.dim == 1 and not A.wedge.is_zero:
            pass  # rays in d=1: both reprs denote the same half-line
        else:
            raise UnsupportedOperation("polytopic within discrete is undecided here")
    return all(B.member(g) for g in A.generators)


def set_eq(A: UpperSet, B: UpperSet) -> bool:
    if A.repr == B.repr:
        return A == B
    return subset(A, B) and subset(B, A)


def intersect(A: UpperSet, B: UpperSet) -> UpperSet:
    """Finite intersections in orthant DISCRETE mode via staircase joins."""
    if A.wedge != B.wedge:
        raise WedgeMismatch("operands live over different wedges")
    if not A.wedge.is_orthant or A.repr is not Repr.DISCRETE or B.repr is not Repr.DISCRETE:
        raise UnsupportedOperation("intersections need orthant DISCRETE operands")
    gens = [join_orthant(f, g) for f in A.generators for g in B.generators]
    return UpperSet.make(A.wedge, Repr.DISCRETE, gens)


def is_n_convex_set(A: UpperSet, n: int, multiset_cap: int = 512) -> bool:
    """Decide n-convexity through the averaged-generator criterion.

    DISCRETE: (f_1 + ... + f_n)/n must land back in the set for every
    n-multiset of generators (exact by divisibility of the carrier).
    POLYTOPIC sets are convex outright.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1 or A.repr is Repr.POLYTOPIC:
        return True
    k = len(A.generators)
    from math import comb

    if comb(k + n - 1, n) > multiset_cap:
        raise MultisetCapExceeded(
            f"{comb(k + n - 1, n)} multisets exceed cap {multiset_cap}; lower n or generators"
        )
    for combo in combinations_with_replacement(A.generators, n):
        total = combo[0]
        for g in combo[1:]:
            total = vadd(total, g)
        if not A.member(divide(total, n)):
            return False
    return True


def convex_hull(A: UpperSet) -> UpperSet:
    """Smallest convex W-invariant superset: same generators, POLYTOPIC."""
    return UpperSet.make(A.wedge, Repr.POLYTOPIC, A.generators)


def phi_embed(w: Wedge, x: Vec) -> UpperSet:
    """x |-> x + W, the order-reversing embedding of the element cornet."""
    return UpperSet.make(w, Repr.DISCRETE, [x])


def finite_intersection(sets: Sequence[UpperSet]) -> UpperSet:
    acc = sets[0]
    for s in sets[1:]:
        acc = intersect(acc, s)
    return acc


@dataclass
class SetArchFamily(ArchFamily):
    epsilons: tuple[Fraction, ...] = ()
    direction: Optional[Vec] = None


def set_arch_family(
    w: Wedge, epsilons: Sequence, direction: Optional[Vec] = None
) -> SetArchFamily:
    """The family a_eps = {-eps * interior direction} + W, with the halving
    witness a_eps -> a_{eps/2}."""
    eps = tuple(sorted((rat(e) for e in epsilons), reverse=True))
    if any(e <= 0 for e in eps):
        raise ValueError("epsilons must be positive")
    direction = direction if direction is not None else w.ones()
    if not w.interior_contains(direction):
        raise ValueError("direction must be strictly interior to the wedge")

    def member_for(e: Fraction) -> UpperSet:
        return UpperSet.make(w, Repr.DISCRETE, [vscale(-e, direction)])

    def witness(a: UpperSet) -> UpperSet:
        (g,) = a.generators
        return UpperSet.make(w, Repr.DISCRETE, [vscale(Fraction(1, 2), g)])

    return SetArchFamily(
        elements=tuple(member_for(e) for e in eps),
        witness=witness,
        label="set-eps-family",
        epsilons=eps,
        direction=direction,
    )


def set_closure(A: UpperSet, fam: Optional[SetArchFamily] = None) -> UpperSet:
    # Finitely generated denotations are closed in the rational model.
    return A


def _arch_exact_set(x: UpperSet, probe: UpperSet) -> Optional[tuple[bool, Optional[int]]]:
    """Exact Archimedean threshold when some generator of x points into the
    strictly negative cone: 0 in U + n*x as soon as f + n.g <= 0."""
    w = x.wedge
    if not w.is_orthant:
        return None
    best: Optional[int] = None
    for g in x.generators:
        if not all(gi <= 0 for gi in g):
            continue
        for f in probe.generators:
            n0 = 1
            ok = True
            for fi, gi in zip(f, g):
                if gi < 0:
                    n0 = max(n0, (fi / -gi).__ceil__())
                elif fi > 0:
                    ok = False
                    break
            if ok:
                best = n0 if best is None else min(best, n0)
    if best is not None:
        return True, best
    return None


def _bounded_exact_set(x: UpperSet, a: UpperSet) -> Optional[int]:
    """Exact boundedness threshold against a single strictly negative
    generator: x <= n*a iff every generator dominates n.g."""
    w = x.wedge
    if not w.is_orthant or len(a.generators) != 1:
        return None
    (g,) = a.generators
    if not all(gi < 0 for gi in g):
        return None
    n0 = 1
    for f in x.generators:
        for fi, gi in zip(f, g):
            n0 = max(n0, (fi / gi).__ceil__())
    return n0


def _sample_gens(
    w: Wedge, rng: random.Random, max_gens: int, integer: bool
) -> list[Vec]:
    count = rng.randint(1, max_gens)
    dens = (1,) if integer else (1, 2, 4)
    return [
        tuple(Fraction(rng.randint(-8, 8), rng.choice(dens)) for _ in range(w.dim))
        for _ in range(count)
    ]


def make_set_cornet(
    w: Wedge, rp: Repr = Repr.DISCRETE, max_gens: int = 5, integer: bool = False
) -> CornetInstance:
    """The cornet of finitely generated W-invariant sets ordered by
    inclusion, with seeded generator sampling."""

    unit = UpperSet.make(w, rp, [vzero(w.dim)])

    def sampler(rng: random.Random) -> UpperSet:
        return UpperSet.make(w, rp, _sample_gens(w, rng, max_gens, integer))

    def nonneg_sampler(rng: random.Random) -> UpperSet:
        gens = _sample_gens(w, rng, max_gens - 1, integer) + [vzero(w.dim)]
        return UpperSet.make(w, rp, gens)

    def serialize(A: UpperSet):
        return {
            "repr": A.repr.value,
            "generators": [[str(c) for c in g] for g in A.generators],
        }

    inst = CornetInstance(
        name=f"set{'Z' if integer else 'Q'}(d={w.dim},{rp.value})",
        zero=unit,
        add=msum,
        star=star_set,
        leq=subset,
        sampler=sampler,
        nonneg_sampler=nonneg_sampler,
        finite_inf=(
            finite_intersection
            if (w.is_orthant and rp is Repr.DISCRETE)
            else None
        ),
        hull=convex_hull,
        closure=set_closure,
        serialize=serialize,
        arch_exact=_arch_exact_set if w.is_orthant else None,
        bounded_exact=_bounded_exact_set if w.is_orthant else None,
    )
    return inst


def enumerate_z_subsets(bound: int, w: Optional[Wedge] = None, lo: int = 0) -> list[UpperSet]:
    """All nonempty subsets of {lo..bound} as upper sets over (Z, W={0});
    the finite universe used by the counterexample hunt."""
    w = w or Wedge.zero(1)
    vals = list(range(lo, bound + 1))
    out = []
    for mask in range(1, 1 << len(vals)):
        gens = [(Fraction(v),) for i, v in enumerate(vals) if mask & (1 << i)]
        out.append(UpperSet.make(w, Repr.DISCRETE, gens))
    return out


def order_convex_z(A: UpperSet) -> bool:
    """Order-convexity of a finite integer set: no gaps between min and max.

    Over (Z, W={0}) the averaged-generator notion of convexity admits only
    singletons, so the counterexample hunt uses this lattice analogue when
    deciding which sets count as convex.
    """
    vals = sorted(g[0] for g in A.generators)
    return all(b - a == 1 for a, b in zip(vals, vals[1:]))


def interval_z_subsets(bound: int, w: Optional[Wedge] = None, lo: int = 0) -> list[UpperSet]:
    """The interval sets {a..b} within {lo..bound}: the convex subuniverse."""
    w = w or Wedge.zero(1)
    out = []
    for a in range(lo, bound + 1):
        for b in range(a, bound + 1):
            gens = [(Fraction(i),) for i in range(a, b + 1)]
            out.append(UpperSet.make(w, Repr.DISCRETE, gens))
    return out
