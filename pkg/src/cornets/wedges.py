"""Wedges over Q^d and the element cornet they induce.

A wedge is a pointed polyhedral cone W; it orders the ambient rational
vector space by x <= y iff y - x lies in W.  With star equal to iterated
addition this gives the simplest cornet, in which every element is n-convex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import ArchFamily, CornetInstance, Horizon, Verdict, VerdictRecord
from .geometry import (
    ConeH,
    Vec,
    cone_pointed,
    divide,
    rat,
    vadd,
    vdot,
    vneg,
    vscale,
    vsub,
    vzero,
)


class NotPointedError(ValueError):
    """The cone contains a line, so it cannot order the space."""


@dataclass(frozen=True)
class Wedge:
    cone: ConeH
    is_orthant: bool = False
    is_zero: bool = False

    def __post_init__(self):
        pointed, witness = cone_pointed(self.cone)
        if not pointed:
            raise NotPointedError(f"cone contains the line through {witness}")
        # Condition (iii) of the wedge axioms, n^{-1}(W) subset of W, holds
        # automatically over Q: M(n x) >= 0 iff M x >= 0.

    @property
    def dim(self) -> int:
        return self.cone.dim

    def contains(self, x: Vec) -> bool:
        return self.cone.contains(x)

    def interior_contains(self, x: Vec) -> bool:
        return self.cone.contains_strictly(x)

    def leq(self, x: Vec, y: Vec) -> bool:
        return self.cone.contains(vsub(y, x))

    @staticmethod
    def orthant(dim: int) -> "Wedge":
        return Wedge(ConeH.orthant(dim), is_orthant=True)

    @staticmethod
    def zero(dim: int) -> "Wedge":
        return Wedge(ConeH.zero(dim), is_zero=True)

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Wedge":
        rows = tuple(tuple(rat(c) for c in r) for r in rows)
        dim = len(rows[0])
        return Wedge(ConeH(dim, rows))

    def ones(self) -> Vec:
        """The all-ones direction (strictly interior for the orthant)."""
        return (Fraction(1),) * self.dim


def leq_w(w: Wedge, x: Vec, y: Vec) -> bool:
    """x <= y in the wedge order iff y lands in x + W."""
    return w.leq(x, y)


def interior_archimedean(w: Wedge, x: Vec, probes: Sequence[Vec], n_max: int = 12) -> VerdictRecord:
    """Archimedean test in the element cornet.

    Strictly interior x admits an exact per-probe threshold
    n0 = max_rows ceil(-(m.u) / (m.x)); boundary elements fall back to a
    horizon search.
    """
    details: dict = {"n0": {}}
    if w.interior_contains(x) and w.cone.rows:
        for idx, u in enumerate(probes):
            n0 = 1
            for m in w.cone.rows:
                mu, mx = vdot(m, u), vdot(m, x)
                if mu < 0:
                    need = -mu / mx
                    n0 = max(n0, need.__ceil__())
            details["n0"][idx] = n0
        return VerdictRecord(Verdict.ANALYTICALLY_VERIFIED, details)
    for idx, u in enumerate(probes):
        found = None
        for n0 in range(1, n_max + 1):
            if all(w.contains(vadd(u, vscale(n, x))) for n in range(n0, n_max + 1)):
                found = n0
                break
        if found is None:
            details["refuting_probe"] = u
            return VerdictRecord(Verdict.REFUTED_AT_HORIZON, details)
        details["n0"][idx] = found
    return VerdictRecord(Verdict.VERIFIED_AT_HORIZON, details)


def wbounded_check(w: Wedge, x: Vec, a: Vec) -> VerdictRecord:
    """Exact n0 with x <= n.a for all n >= n0, for strictly interior a."""
    if not w.interior_contains(a) or not w.cone.rows:
        raise ValueError("reference element must be strictly interior")
    n0 = 1
    for m in w.cone.rows:
        mx, ma = vdot(m, x), vdot(m, a)
        if mx > 0:
            n0 = max(n0, (mx / ma).__ceil__())
    return VerdictRecord(Verdict.ANALYTICALLY_VERIFIED, {"n0": n0})


def elem_arch_family(w: Wedge, epsilons: Sequence) -> ArchFamily:
    """Interior elements eps * ones, with halving witnesses; for the orthant
    every such element is Archimedean with a closed-form threshold."""
    eps = tuple(sorted((rat(e) for e in epsilons), reverse=True))
    if any(e <= 0 for e in eps):
        raise ValueError("epsilons must be positive")
    ones = w.ones()
    return ArchFamily(
        elements=tuple(vscale(e, ones) for e in eps),
        witness=lambda a: vscale(Fraction(1, 2), a),
        label="elem-eps-family",
    )


def _elem_sampler(w: Wedge, rng: random.Random) -> Vec:
    return tuple(
        Fraction(rng.randint(-8, 8), rng.choice((1, 2, 4))) for _ in range(w.dim)
    )


def _elem_nonneg_sampler(w: Wedge, rng: random.Random) -> Vec:
    if w.is_zero:
        return vzero(w.dim)
    if w.is_orthant:
        return tuple(
            Fraction(rng.randint(0, 8), rng.choice((1, 2, 4))) for _ in range(w.dim)
        )
    # Nonnegative combination of sampled cone members found by rejection.
    for _ in range(200):
        v = _elem_sampler(w, rng)
        if w.contains(v):
            return v
    return vzero(w.dim)


def make_elem_cornet(w: Wedge) -> CornetInstance:
    """The cornet (Q^d, +, ., <=_W); star is iterated addition, so every
    element is n-convex and the superadditivity law holds with equality."""

    def star(n: int, x: Vec) -> Vec:
        if n < 1:
            raise ValueError("n must be >= 1")
        return vscale(n, x)

    def arch_exact(x: Vec, u: Vec) -> Optional[tuple[bool, Optional[int]]]:
        if w.interior_contains(x) and w.cone.rows:
            rec = interior_archimedean(w, x, [u])
            return True, rec.details["n0"][0]
        return None

    def bounded_exact(x: Vec, a: Vec) -> Optional[int]:
        if w.interior_contains(a) and w.cone.rows:
            return wbounded_check(w, x, a).details["n0"]
        return None

    def finite_inf(xs: Sequence[Vec]) -> Vec:
        if not w.is_orthant:
            raise ValueError("finite infima only in orthant mode")
        return tuple(min(x[i] for x in xs) for i in range(w.dim))

    return CornetInstance(
        name=f"elemQ(d={w.dim})",
        zero=vzero(w.dim),
        add=vadd,
        star=star,
        leq=w.leq,
        sampler=lambda rng: _elem_sampler(w, rng),
        nonneg_sampler=lambda rng: _elem_nonneg_sampler(w, rng),
        finite_inf=finite_inf if w.is_orthant else None,
        closure=lambda x: x,
        serialize=lambda x: [str(c) for c in x],
        arch_exact=arch_exact,
        bounded_exact=bounded_exact,
    )
