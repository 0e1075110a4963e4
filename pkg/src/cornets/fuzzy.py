"""Step membership functions under sup-min convolution.

A StepFuzzy value is a finite descending level decomposition: finitely many
level values with nested cuts, each cut a finitely generated W-invariant
upper set.  Because cuts are finitely generated, the supremum in the sup-min
convolution is attained and every operation here is exact and levelwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import ArchFamily, CornetInstance
from .geometry import Vec, rat, vscale, vzero
from .sets import (
    Repr,
    UpperSet,
    WedgeMismatch,
    _arch_exact_set,
    _bounded_exact_set,
    _sample_gens,
    finite_intersection,
    intersect,
    is_n_convex_set,
    msum,
    star_set,
    subset,
)
from .wedges import Wedge


class NoArchimedeanElements(ValueError):
    """Raised when an Archimedean family is requested below the top level:
    cornets of membership functions with supremum bound p < 1 have none."""


@dataclass(frozen=True)
class StepFuzzy:
    wedge: Wedge
    p: Fraction
    levels: tuple[tuple[Fraction, UpperSet], ...]

    @staticmethod
    def make(wedge: Wedge, p, levels: Iterable[tuple]) -> "StepFuzzy":
        p = rat(p)
        if not (0 < p <= 1):
            raise ValueError("p must lie in (0, 1]")
        lv = [(rat(a), cut) for a, cut in levels]
        if not lv:
            raise ValueError("level list must be nonempty")
        for a, cut in lv:
            if not (0 < a <= 1):
                raise ValueError(f"level value {a} outside (0, 1]")
            if cut.wedge != wedge:
                raise WedgeMismatch("cut lives over a different wedge")
        for (a1, c1), (a2, c2) in zip(lv, lv[1:]):
            if not a1 > a2:
                raise ValueError("level values must be strictly decreasing")
            if not subset(c1, c2):
                raise ValueError("cuts must be nested increasing")
        if lv[0][0] < p:
            raise ValueError(f"sup {lv[0][0]} drops below p = {p}")
        # Canonical form: if two cuts coincide, only the highest level matters.
        canon: list[tuple[Fraction, UpperSet]] = [lv[0]]
        for a, cut in lv[1:]:
            if cut != canon[-1][1]:
                canon.append((a, cut))
        return StepFuzzy(wedge, p, tuple(canon))

    def value(self, x: Vec) -> Fraction:
        best = Fraction(0)
        for a, cut in self.levels:
            if cut.member(x):
                return a  # levels descend, first hit is the max
        return best

    @property
    def top(self) -> Fraction:
        return self.levels[0][0]


def chi(A: UpperSet, p=1) -> StepFuzzy:
    """The characteristic function of an upper set."""
    return StepFuzzy.make(A.wedge, p, [(Fraction(1), A)])


def chi_embed(A: UpperSet) -> StepFuzzy:
    """The cornet-preserving embedding of the set cornet at p = 1."""
    return chi(A, p=1)


def level_cut(f: StepFuzzy, alpha) -> Optional[UpperSet]:
    """The cut {f >= alpha}: the widest stored cut whose level reaches alpha."""
    alpha = rat(alpha)
    if not (0 < alpha <= 1):
        raise ValueError("alpha must lie in (0, 1]")
    hit = None
    for a, cut in f.levels:
        if a >= alpha:
            hit = cut
        else:
            break
    return hit


def _merged_alphas(f: StepFuzzy, g: StepFuzzy) -> list[Fraction]:
    cap = min(f.top, g.top)
    values = {a for a, _ in f.levels} | {a for a, _ in g.levels}
    return sorted((a for a in values if a <= cap), reverse=True)


def oplus(f: StepFuzzy, g: StepFuzzy) -> StepFuzzy:
    """Sup-min convolution, computed cut-by-cut as Minkowski sums."""
    if f.wedge != g.wedge:
        raise WedgeMismatch("operands live over different wedges")
    levels = [
        (a, msum(level_cut(f, a), level_cut(g, a))) for a in _merged_alphas(f, g)
    ]
    return StepFuzzy.make(f.wedge, min(f.p, g.p), levels)


def odot(n: int, f: StepFuzzy) -> StepFuzzy:
    """(n . f)(x) = f(x/n); levelwise this scales every cut by n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return StepFuzzy.make(f.wedge, f.p, [(a, star_set(n, c)) for a, c in f.levels])


def leq_fuzzy(f: StepFuzzy, g: StepFuzzy) -> bool:
    """Pointwise order, decided levelwise on f's level values."""
    if f.wedge != g.wedge:
        raise WedgeMismatch("operands live over different wedges")
    for a, cut in f.levels:
        gcut = level_cut(g, a)
        if gcut is None or not subset(cut, gcut):
            return False
    return True


def support(f: StepFuzzy) -> UpperSet:
    """The outermost cut; where the membership value is positive."""
    return f.levels[-1][1]


def is_n_quasiconcave(f: StepFuzzy, n: int, multiset_cap: int = 512) -> bool:
    """min(f(x_1),...,f(x_n)) <= f(mean) for all tuples; equivalently every
    cut is n-convex as an upper set."""
    return all(is_n_convex_set(cut, n, multiset_cap) for _, cut in f.levels)


def fuzzy_inf(fs: Sequence[StepFuzzy]) -> StepFuzzy:
    """Pointwise minimum of finitely many step functions (orthant DISCRETE
    cuts); levelwise this intersects cuts."""
    if not fs:
        raise ValueError("need at least one function")
    p = min(f.p for f in fs)
    cap = min(f.top for f in fs)
    values = sorted({a for f in fs for a, _ in f.levels if a <= cap}, reverse=True)
    levels = []
    for a in values:
        cuts = [level_cut(f, a) for f in fs]
        if any(c is None for c in cuts):
            continue
        levels.append((a, finite_intersection(cuts)))
    if not levels or levels[0][0] < p:
        raise ValueError("family is not lower bounded in F^p: sup drops below p")
    return StepFuzzy.make(fs[0].wedge, p, levels)


@dataclass
class FuzzyArchFamily(ArchFamily):
    epsilons: tuple[Fraction, ...] = ()


def fuzzy_arch_family(w: Wedge, epsilons: Sequence, p=1) -> FuzzyArchFamily:
    """Characteristic functions of {-eps * ones} + W; only the p = 1 cornet
    has Archimedean elements at all."""
    if rat(p) < 1:
        raise NoArchimedeanElements(
            "membership-function cornets with p < 1 have no Archimedean elements"
        )
    eps = tuple(sorted((rat(e) for e in epsilons), reverse=True))
    if any(e <= 0 for e in eps):
        raise ValueError("epsilons must be positive")
    ones = w.ones()

    def member_for(e: Fraction) -> StepFuzzy:
        cut = UpperSet.make(w, Repr.DISCRETE, [vscale(-e, ones)])
        return chi(cut)

    def witness(a: StepFuzzy) -> StepFuzzy:
        (g,) = a.levels[0][1].generators
        cut = UpperSet.make(w, Repr.DISCRETE, [vscale(Fraction(1, 2), g)])
        return chi(cut)

    return FuzzyArchFamily(
        elements=tuple(member_for(e) for e in eps),
        witness=witness,
        label="fuzzy-eps-family",
        epsilons=eps,
    )


def fuzzy_closure(f: StepFuzzy) -> StepFuzzy:
    # Every representable element has closed cuts, hence is its own closure.
    return f


_LEVEL_POOL = (Fraction(1), Fraction(3, 4), Fraction(1, 2), Fraction(1, 4))


def _sample_fuzzy(
    w: Wedge, p: Fraction, rp: Repr, rng: random.Random, max_levels: int, force_zero: bool
) -> StepFuzzy:
    tops = [a for a in _LEVEL_POOL if a >= p]
    # Nonnegative elements need value 1 at the origin, so force the top level.
    top = Fraction(1) if force_zero else rng.choice(tops)
    lower = [a for a in _LEVEL_POOL if a < top]
    count = rng.randint(0, min(max_levels - 1, len(lower)))
    alphas = [top] + sorted(rng.sample(lower, count), reverse=True)
    levels = []
    gens: list[Vec] = [vzero(w.dim)] if force_zero else []
    for a in alphas:
        gens = gens + _sample_gens(w, rng, 2, integer=False)
        levels.append((a, UpperSet.make(w, rp, gens)))
    return StepFuzzy.make(w, p, levels)


def make_fuzzy_cornet(
    w: Wedge, p=1, cut_repr: Repr = Repr.DISCRETE, max_levels: int = 3
) -> CornetInstance:
    """The cornet of step membership functions with supremum at least p,
    under sup-min convolution and pointwise order."""
    p = rat(p)
    unit = chi(UpperSet.make(w, cut_repr, [vzero(w.dim)]), p)

    def arch_exact(x: StepFuzzy, probe: StepFuzzy) -> Optional[tuple[bool, Optional[int]]]:
        if p < 1:
            # (f + n.g)(0) <= f(0) < 1 for the constant-p probe: nothing is
            # Archimedean below the top level.
            return False, None
        if x.top < 1 or probe.top < 1:
            return False, None
        return _arch_exact_set(x.levels[0][1], probe.levels[0][1])

    def bounded_exact(x: StepFuzzy, a: StepFuzzy) -> Optional[int]:
        if len(a.levels) != 1 or a.top < 1:
            return None
        return _bounded_exact_set(support(x), a.levels[0][1])

    def finite_inf(fs):
        return fuzzy_inf(list(fs))

    def serialize(f: StepFuzzy):
        return {
            "p": str(f.p),
            "levels": [
                {
                    "alpha": str(a),
                    "set": {
                        "repr": c.repr.value,
                        "generators": [[str(v) for v in g] for g in c.generators],
                    },
                }
                for a, c in f.levels
            ],
        }

    return CornetInstance(
        name=f"fuzzyQ(d={w.dim},p={p},{cut_repr.value})",
        zero=unit,
        add=oplus,
        star=odot,
        leq=leq_fuzzy,
        sampler=lambda rng: _sample_fuzzy(w, p, cut_repr, rng, max_levels, False),
        nonneg_sampler=lambda rng: _sample_fuzzy(w, p, cut_repr, rng, max_levels, True),
        finite_inf=(
            finite_inf if (w.is_orthant and cut_repr is Repr.DISCRETE) else None
        ),
        closure=fuzzy_closure,
        serialize=serialize,
        arch_exact=arch_exact,
        bounded_exact=bounded_exact if w.is_orthant else None,
    )
