"""The abstract cornet signature and the law-checking machinery.

A cornet is an ordered commutative unital semigroup (X, +, 0, <=) carrying a
second multiplication * by positive integers, with the compatibility laws
checked by :func:`check_cornet_laws`.  The iterated-addition action n.x is
derived here once (:func:`dot_mul`) and shared by every instance.

Everything in this module is generic over a :class:`CornetInstance`; the
concrete element/set/fuzzy universes plug in their operations and optional
exact deciders for the semi-decidable predicates (Archimedean-ness,
boundedness).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Optional, Sequence


class Verdict(Enum):
    VERIFIED_AT_HORIZON = "verified-at-horizon"
    REFUTED_AT_HORIZON = "refuted-at-horizon"
    ANALYTICALLY_VERIFIED = "analytically-verified"
    ANALYTICALLY_REFUTED = "analytically-refuted"

    @property
    def holds(self) -> bool:
        return self in (Verdict.VERIFIED_AT_HORIZON, Verdict.ANALYTICALLY_VERIFIED)

    @property
    def exact(self) -> bool:
        return self in (Verdict.ANALYTICALLY_VERIFIED, Verdict.ANALYTICALLY_REFUTED)


@dataclass
class VerdictRecord:
    verdict: Verdict
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict.holds


@dataclass
class LawReport:
    """Outcome of one universally quantified law over sampled cases."""

    law: str
    cases: int
    violations: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, item) -> None:
        if len(self.violations) < 10:  # keep reports readable
            self.violations.append(item)


@dataclass(frozen=True)
class Horizon:
    """Finite stand-in for 'there exists n0' quantifiers: search n up to n_max."""

    n_max: int = 12
    probes: tuple = ()

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")


@dataclass
class ArchFamily:
    """A finite indexed family of (purportedly) Archimedean elements together
    with a continuity witness map a -> b satisfying b + b <= a."""

    elements: tuple
    witness: Callable[[Any], Any]
    label: str = "family"


@dataclass
class CornetInstance:
    """A concrete cornet: carrier operations plus optional extras.

    ``add``/``star``/``leq``/``zero`` are the signature.  Elements must have
    canonical representations so that ``==`` is semantic equality; ``leq``
    both ways is used as a cross-check in the test-suite, not here.
    """

    name: str
    zero: Any
    add: Callable[[Any, Any], Any]
    star: Callable[[int, Any], Any]
    leq: Callable[[Any, Any], bool]
    sampler: Optional[Callable[[random.Random], Any]] = None
    nonneg_sampler: Optional[Callable[[random.Random], Any]] = None
    finite_inf: Optional[Callable[[Sequence[Any]], Any]] = None
    enumerator: Optional[Callable[[int], list]] = None
    hull: Optional[Callable[[Any], Any]] = None
    closure: Optional[Callable[[Any], Any]] = None
    serialize: Callable[[Any], Any] = repr
    arch_exact: Optional[Callable[[Any, Any], Optional[tuple[bool, Optional[int]]]]] = None
    bounded_exact: Optional[Callable[[Any, Any], Optional[int]]] = None

    def eq(self, x, y) -> bool:
        return x == y

    def dot(self, n: int, x):
        return dot_mul(self, n, x)


def dot_mul(inst: CornetInstance, n: int, x):
    """n-fold iterated addition, computed by binary doubling."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return inst.zero
    result = None
    base = x
    while n:
        if n & 1:
            result = base if result is None else inst.add(result, base)
        n >>= 1
        if n:
            base = inst.add(base, base)
    return result


def dot_mul_naive(inst: CornetInstance, n: int, x):
    """The textbook recursion; oracle for :func:`dot_mul`."""
    if n == 0:
        return inst.zero
    acc = x
    for _ in range(n - 1):
        acc = inst.add(acc, x)
    return acc


def case_rng(seed: int, index: int) -> random.Random:
    """Deterministic per-case RNG so parallel and serial runs agree."""
    return random.Random(f"{seed}:{index}")


def _sample_case(inst: CornetInstance, rng: random.Random) -> dict:
    s = inst.sampler
    if s is None:
        raise ValueError(f"instance {inst.name} has no sampler")
    case = {"x": s(rng), "y": s(rng), "z": s(rng)}
    if inst.nonneg_sampler is not None:
        case["p"] = inst.nonneg_sampler(rng)
        case["q"] = inst.nonneg_sampler(rng)
    return case


def merge_reports(chunks: Sequence[Sequence[LawReport]]) -> list[LawReport]:
    """Merge law reports from contiguous case chunks, preserving case order
    so that parallel and serial runs produce identical output."""
    merged: dict[str, LawReport] = {}
    order: list[str] = []
    for chunk in chunks:
        for r in chunk:
            if r.law not in merged:
                merged[r.law] = LawReport(r.law, 0)
                order.append(r.law)
            m = merged[r.law]
            m.cases += r.cases
            for v in r.violations:
                m.record(v)
            m.notes.extend(r.notes)
            m.elapsed += r.elapsed
    return [merged[n] for n in order]


def check_cornet_laws(
    inst: CornetInstance, seed: int = 0, cases: int = 100, n_max: int = 6, start: int = 0
) -> list[LawReport]:
    """Check Def-1 (ordered semigroup) and all six cornet star laws.

    Both directions of the order-compatibility law (iv) are exercised; the
    forward direction on constructed comparable pairs, the reverse on every
    sampled pair where the scaled comparison happens to hold.
    """
    names = [
        "add-associativity",
        "add-commutativity",
        "add-unit",
        "order-reflexivity",
        "order-antisymmetry",
        "order-transitivity",
        "translation-monotonicity",
        "star-i-action",
        "star-ii-distributivity",
        "star-iii-superadditivity",
        "star-iv-forward",
        "star-iv-reverse",
        "star-v-unit",
        "star-vi-zero",
    ]
    reports = {n: LawReport(n, cases) for n in names}
    t0 = time.perf_counter()
    add, star, leq, eq = inst.add, inst.star, inst.leq, inst.eq
    for i in range(start, start + cases):
        rng = case_rng(seed, i)
        c = _sample_case(inst, rng)
        x, y, z = c["x"], c["y"], c["z"]
        ser = lambda *els: tuple(inst.serialize(e) for e in els)

        if not eq(add(add(x, y), z), add(x, add(y, z))):
            reports["add-associativity"].record(ser(x, y, z))
        if not eq(add(x, y), add(y, x)):
            reports["add-commutativity"].record(ser(x, y))
        if not eq(add(x, inst.zero), x):
            reports["add-unit"].record(ser(x))
        if not leq(x, x):
            reports["order-reflexivity"].record(ser(x))
        if leq(x, y) and leq(y, x) and not eq(x, y):
            reports["order-antisymmetry"].record(ser(x, y))

        # Comparable chain x <= b <= c built from nonnegative perturbations.
        p = c.get("p")
        q = c.get("q")
        if p is not None:
            b = add(x, p)
            cc = add(b, q)
            if not (leq(x, b) and leq(b, cc)):
                reports["translation-monotonicity"].record(ser(x, p, q))
            elif not leq(x, cc):
                reports["order-transitivity"].record(ser(x, b, cc))
            if not leq(add(x, z), add(b, z)):
                reports["translation-monotonicity"].record(ser(x, b, z))
        if leq(x, y) and leq(y, z) and not leq(x, z):
            reports["order-transitivity"].record(ser(x, y, z))

        sx = [None] + [star(n, x) for n in range(1, n_max + 1)]
        sy = [None] + [star(n, y) for n in range(1, n_max + 1)]
        xy = add(x, y)
        sxy = [None] + [star(n, xy) for n in range(1, n_max + 1)]
        for n in range(1, n_max + 1):
            for m in range(1, n_max + 1):
                if n * m <= n_max:
                    if not eq(sx[n * m], star(n, sx[m])):
                        reports["star-i-action"].record((n, m) + ser(x))
                if n + m <= n_max:
                    if not leq(sx[n + m], add(sx[n], sx[m])):
                        reports["star-iii-superadditivity"].record((n, m) + ser(x))
            if not eq(sxy[n], add(sx[n], sy[n])):
                reports["star-ii-distributivity"].record((n,) + ser(x, y))
            if p is not None:
                b = add(x, p)
                if not leq(sx[n], star(n, b)):
                    reports["star-iv-forward"].record((n,) + ser(x, b))
            if leq(sx[n], sy[n]) and not leq(x, y):
                reports["star-iv-reverse"].record((n,) + ser(x, y))
        if not eq(sx[1], x):
            reports["star-v-unit"].record(ser(x))
    for n in range(1, n_max + 1):
        if not inst.eq(inst.star(n, inst.zero), inst.zero):
            reports["star-vi-zero"].record((n,))
    elapsed = time.perf_counter() - t0
    for r in reports.values():
        r.elapsed = elapsed / len(reports)
    return [reports[n] for n in names]


def check_lemma_identities(
    inst: CornetInstance, seed: int = 0, cases: int = 100, n_max: int = 6, start: int = 0
) -> list[LawReport]:
    """The two derived identities relating * and iterated addition:
    n*(m.x) == m.(n*x), and (mn)*x <= n.(m*x)."""
    eq_report = LawReport("lemma-star-dot-commute", cases)
    ineq_report = LawReport("lemma-star-dot-bound", cases)
    t0 = time.perf_counter()
    for i in range(start, start + cases):
        rng = case_rng(seed, i)
        x = inst.sampler(rng)
        sx = [None] + [inst.star(n, x) for n in range(1, n_max + 1)]
        # Incremental iterated sums: dx[m] = m.x, and per-n running m.(n*x).
        dmx = x
        dots_of_sx = list(sx)  # slot n holds the running k.(n*x)
        for m in range(1, n_max + 1):
            if m > 1:
                dmx = inst.add(dmx, x)
            for n in range(1, n_max + 1):
                if m > 1:
                    dots_of_sx[n] = inst.add(dots_of_sx[n], sx[n])
                if not inst.eq(inst.star(n, dmx), dots_of_sx[n]):
                    eq_report.record((n, m, inst.serialize(x)))
                # Here dots_of_sx[n] = m.(n*x); the bound reads (nm)*x <= m.(n*x).
                if n * m <= n_max and not inst.leq(sx[n * m], dots_of_sx[n]):
                    ineq_report.record((n, m, inst.serialize(x)))
    eq_report.elapsed = ineq_report.elapsed = (time.perf_counter() - t0) / 2
    return [eq_report, ineq_report]


def is_n_convex(inst: CornetInstance, x, n: int) -> bool:
    """x is n-convex iff the two multiplications agree on it: n*x == n.x."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return True
    return inst.eq(inst.star(n, x), inst.dot(n, x))


def convexity_semigroup_check(
    inst: CornetInstance, x, n_max: int = 6, seed: int = 0, cases: int = 25
) -> LawReport:
    """C_x is a unital multiplicative subsemigroup of N, and each C^n is
    closed under + and m* (checked on samples)."""
    report = LawReport("convexity-semigroup", cases)
    t0 = time.perf_counter()
    cx = {n for n in range(1, n_max + 1) if is_n_convex(inst, x, n)}
    if 1 not in cx:
        report.record(("1 not in C_x", inst.serialize(x)))
    for n in cx:
        for m in cx:
            if n * m <= n_max and n * m not in cx:
                report.record(("product escapes C_x", n, m, inst.serialize(x)))
    if inst.sampler is not None:
        for i in range(cases):
            rng = case_rng(seed, i)
            a, b = inst.sampler(rng), inst.sampler(rng)
            for n in range(2, n_max + 1):
                if is_n_convex(inst, a, n) and is_n_convex(inst, b, n):
                    if not is_n_convex(inst, inst.add(a, b), n):
                        report.record(("sum escapes C^n", n, inst.serialize(a), inst.serialize(b)))
                if is_n_convex(inst, a, n):
                    m = 2 + (i % max(1, n_max - 1))
                    if not is_n_convex(inst, inst.star(m, a), n):
                        report.record(("star escapes C^n", n, m, inst.serialize(a)))
    report.elapsed = time.perf_counter() - t0
    return report


def is_nonnegative(inst: CornetInstance, x) -> bool:
    return inst.leq(inst.zero, x)


def _horizon_n0(ok: list[bool], n_max: int) -> Optional[int]:
    """Smallest n0 with ok[n] for all n0 <= n <= n_max, if any (ok is 1-based)."""
    n0 = None
    for n in range(n_max, 0, -1):
        if ok[n]:
            n0 = n
        else:
            break
    return n0


def is_archimedean(inst: CornetInstance, x, h: Horizon) -> VerdictRecord:
    """Semi-decide 'for all u there is n0 with 0 <= u + n*x for n >= n0'.

    The universal quantifier over u is finitized by the horizon's probe
    list; instances with an exact decider short-circuit per probe.
    """
    if not h.probes:
        raise ValueError("horizon probe list is empty")
    details: dict = {"n0": {}}
    all_exact = True
    for idx, u in enumerate(h.probes):
        res = inst.arch_exact(x, u) if inst.arch_exact is not None else None
        if res is not None:
            holds, n0 = res
            if not holds:
                details["refuting_probe"] = inst.serialize(u)
                return VerdictRecord(Verdict.ANALYTICALLY_REFUTED, details)
            details["n0"][idx] = n0
            continue
        all_exact = False
        ok = [False] * (h.n_max + 1)
        for n in range(1, h.n_max + 1):
            ok[n] = inst.leq(inst.zero, inst.add(u, inst.star(n, x)))
        n0 = _horizon_n0(ok, h.n_max)
        if n0 is None:
            details["refuting_probe"] = inst.serialize(u)
            return VerdictRecord(Verdict.REFUTED_AT_HORIZON, details)
        details["n0"][idx] = n0
    verdict = Verdict.ANALYTICALLY_VERIFIED if all_exact else Verdict.VERIFIED_AT_HORIZON
    return VerdictRecord(verdict, details)


def is_A_bounded(inst: CornetInstance, x, fam: ArchFamily, h: Horizon) -> VerdictRecord:
    """Semi-decide 'for all a in the family, x <= n*a for all large n'."""
    details: dict = {"n0": {}}
    all_exact = True
    for idx, a in enumerate(fam.elements):
        n0 = inst.bounded_exact(x, a) if inst.bounded_exact is not None else None
        if n0 is not None:
            details["n0"][idx] = n0
            continue
        all_exact = False
        ok = [False] * (h.n_max + 1)
        for n in range(1, h.n_max + 1):
            ok[n] = inst.leq(x, inst.star(n, a))
        n0 = _horizon_n0(ok, h.n_max)
        if n0 is None:
            details["refuting_member"] = inst.serialize(a)
            return VerdictRecord(Verdict.REFUTED_AT_HORIZON, details)
        details["n0"][idx] = n0
    verdict = Verdict.ANALYTICALLY_VERIFIED if all_exact else Verdict.VERIFIED_AT_HORIZON
    return VerdictRecord(verdict, details)


def check_A_continuity(inst: CornetInstance, fam: ArchFamily, n_max: int = 6) -> LawReport:
    """Each family member a admits a witness b with b+b <= a, and the derived
    halving chain yields n.b_k <= a and n*b_k <= a for all n <= n_max."""
    report = LawReport("family-continuity", len(fam.elements))
    t0 = time.perf_counter()
    for a in fam.elements:
        b = fam.witness(a)
        if b is None:
            report.record(("missing witness", inst.serialize(a)))
            continue
        if not inst.leq(inst.add(b, b), a):
            report.record(("witness fails b+b <= a", inst.serialize(a), inst.serialize(b)))
            continue
        # Chain a_k with 2^k . a_k <= a; pick k so that n_max <= 2^k.
        k, pow2 = 0, 1
        ak = a
        while pow2 < n_max:
            ak = fam.witness(ak)
            if ak is None:
                report.record(("halving chain breaks", inst.serialize(a)))
                break
            k += 1
            pow2 *= 2
        else:
            if not inst.leq(inst.dot(pow2, ak), a):
                report.record(("2^k . a_k <= a fails", k, inst.serialize(a)))
            for n in range(1, n_max + 1):
                if not inst.leq(inst.dot(n, ak), a):
                    report.record(("n . a_k <= a fails", n, inst.serialize(a)))
                if not inst.leq(inst.star(n, ak), a):
                    report.record(("n * a_k <= a fails", n, inst.serialize(a)))
    report.elapsed = time.perf_counter() - t0
    return report


def verify_closure(
    inst: CornetInstance,
    x,
    y_candidate,
    fam: ArchFamily,
    challenge_set: Sequence[Any] = (),
) -> VerdictRecord:
    """Check y <= x+a for every family member, and maximality of y against a
    finite challenge set.  Maximality beyond the challenges is not claimed."""
    details = {"maximality": "finite-challenge-set", "challenges": len(challenge_set)}
    for a in fam.elements:
        if not inst.leq(y_candidate, inst.add(x, a)):
            details["failing_member"] = inst.serialize(a)
            return VerdictRecord(Verdict.REFUTED_AT_HORIZON, details)
    for z in challenge_set:
        if all(inst.leq(z, inst.add(x, a)) for a in fam.elements):
            if not inst.leq(z, y_candidate):
                details["failing_challenge"] = inst.serialize(z)
                return VerdictRecord(Verdict.REFUTED_AT_HORIZON, details)
    return VerdictRecord(Verdict.VERIFIED_AT_HORIZON, details)


def closure_props_suite(
    inst: CornetInstance,
    fam: ArchFamily,
    seed: int = 0,
    cases: int = 50,
    n_max: int = 6,
    h: Optional[Horizon] = None,
) -> list[LawReport]:
    """The closure-operator property suite (extensivity through convexity
    preservation) on sampled elements; requires inst.closure."""
    if inst.closure is None:
        raise ValueError(f"instance {inst.name} exposes no closure map")
    cl = inst.closure
    names = [
        "closure-i-extensive",
        "closure-ii-monotone",
        "closure-iii-idempotent",
        "closure-iv-sandwich",
        "closure-v-additive",
        "closure-vi-dot",
        "closure-vii-star",
        "closure-viii-bounded",
        "closure-ix-convex",
    ]
    reports = {n: LawReport(n, cases) for n in names}
    t0 = time.perf_counter()
    for i in range(cases):
        rng = case_rng(seed, i)
        x, y = inst.sampler(rng), inst.sampler(rng)
        n = 2 + (i % (n_max - 1)) if n_max > 1 else 1
        cx, cy = cl(x), cl(y)
        if not inst.leq(x, cx):
            reports["closure-i-extensive"].record(inst.serialize(x))
        big = inst.add(x, y) if inst.nonneg_sampler is None else inst.add(x, inst.nonneg_sampler(rng))
        if inst.leq(x, big) and not inst.leq(cx, cl(big)):
            reports["closure-ii-monotone"].record((inst.serialize(x), inst.serialize(big)))
        if not inst.eq(cl(cx), cx):
            reports["closure-iii-idempotent"].record(inst.serialize(x))
        # Sandwich: x <= w <= cl(x) forces cl(w) = cl(x); w = x always works.
        if not inst.eq(cl(x), cx):
            reports["closure-iv-sandwich"].record(inst.serialize(x))
        if not inst.eq(cl(inst.add(cx, cy)), cl(inst.add(x, y))):
            reports["closure-v-additive"].record((inst.serialize(x), inst.serialize(y)))
        if not inst.eq(cl(inst.dot(n, cx)), cl(inst.dot(n, x))):
            reports["closure-vi-dot"].record((n, inst.serialize(x)))
        if not inst.eq(cl(inst.star(n, cx)), cl(inst.star(n, x))):
            reports["closure-vii-star"].record((n, inst.serialize(x)))
        if h is not None:
            if is_A_bounded(inst, x, fam, h).holds and not is_A_bounded(inst, cx, fam, h).holds:
                reports["closure-viii-bounded"].record(inst.serialize(x))
        if is_n_convex(inst, x, n) and not is_n_convex(inst, cx, n):
            reports["closure-ix-convex"].record((n, inst.serialize(x)))
    elapsed = time.perf_counter() - t0
    for r in reports.values():
        r.elapsed = elapsed / len(reports)
    return [reports[n] for n in names]


def subcornet_closure_suite(
    inst: CornetInstance,
    fam: ArchFamily,
    seed: int = 0,
    cases: int = 50,
    h: Optional[Horizon] = None,
) -> list[LawReport]:
    """Archimedean + nonnegative stays Archimedean; bounded elements are
    closed under + and m* (at an enlarged horizon, matching the max(k0, m0)
    argument)."""
    h = h or Horizon()
    arch_report = LawReport("archimedean-absorbs-nonnegative", cases)
    bound_report = LawReport("bounded-subcornet", cases)
    t0 = time.perf_counter()
    big_h = Horizon(2 * h.n_max, h.probes)
    for i in range(cases):
        rng = case_rng(seed, i)
        a = fam.elements[i % len(fam.elements)]
        if inst.nonneg_sampler is not None:
            y = inst.nonneg_sampler(rng)
            if is_archimedean(inst, a, h).holds:
                if not is_archimedean(inst, inst.add(a, y), big_h).holds:
                    arch_report.record((inst.serialize(a), inst.serialize(y)))
        x, y = inst.sampler(rng), inst.sampler(rng)
        m = 2 + (i % 4)
        if is_A_bounded(inst, x, fam, h).holds and is_A_bounded(inst, y, fam, h).holds:
            if not is_A_bounded(inst, inst.add(x, y), fam, big_h).holds:
                bound_report.record(("sum unbounded", inst.serialize(x), inst.serialize(y)))
            if not is_A_bounded(inst, inst.star(m, x), fam, big_h).holds:
                bound_report.record(("star unbounded", m, inst.serialize(x)))
    arch_report.elapsed = bound_report.elapsed = (time.perf_counter() - t0) / 2
    return [arch_report, bound_report]


@dataclass
class CancellationRecord:
    status: str  # "Verified" | "HypothesisNotMet" | "ConclusionFailed"
    hypotheses: dict
    premise: Optional[bool] = None
    conclusion: Optional[bool] = None
    chain: list = field(default_factory=list)


def cancellation_check(
    inst: CornetInstance,
    x,
    y,
    z,
    m: int,
    fam: ArchFamily,
    h: Horizon,
    challenge_set: Sequence[Any] = (),
    replay: bool = False,
) -> CancellationRecord:
    """Verify an instance of the generalized cancellation statement:
    with z family-bounded and y family-closed and m-convex (m >= 2),
    x + z <= y + z forces x <= y.

    A conclusion failure with hypotheses verified would indicate an
    implementation bug, and the optional replay localizes the first broken
    link of the proof chain in that event.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    hyp = {
        "z-bounded": is_A_bounded(inst, z, fam, h),
        "y-closed": verify_closure(inst, y, y, fam, challenge_set),
        "y-m-convex": is_n_convex(inst, y, m),
    }
    hyp_ok = hyp["z-bounded"].holds and hyp["y-closed"].holds and hyp["y-m-convex"]
    premise = inst.leq(inst.add(x, z), inst.add(y, z))
    if not hyp_ok:
        return CancellationRecord("HypothesisNotMet", hyp, premise)
    if not premise:
        return CancellationRecord("PremiseNotMet", hyp, premise)
    conclusion = inst.leq(x, y)
    chain = []
    if replay or not conclusion:
        for n in range(1, h.n_max + 1):
            ok = inst.leq(inst.add(inst.dot(n, x), z), inst.add(inst.dot(n, y), z))
            chain.append((f"n.x+z <= n.y+z @ n={n}", ok))
        mk = m
        while mk <= h.n_max:
            ok = inst.leq(inst.add(inst.star(mk, x), z), inst.add(inst.star(mk, y), z))
            chain.append((f"m^k*x+z <= m^k*y+z @ {mk}", ok))
            mk *= m
    status = "Verified" if conclusion else "ConclusionFailed"
    return CancellationRecord(status, hyp, premise, conclusion, chain)


def ablation_hunt(
    inst: CornetInstance,
    universe: Iterable[Any],
    ablate: str = "none",
    m_cap: int = 4,
    convexity_test: Optional[Callable[[Any], bool]] = None,
) -> Optional[tuple]:
    """Exhaustively search for triples breaking cancellation when one
    hypothesis on y is removed.

    ``ablate`` is one of convexity / closedness / boundedness / none.  The
    scan order is lexicographic on serialized elements, so the first hit is
    reproducible.  ``convexity_test`` overrides the default some-m-convex
    predicate (finite integer universes use order-convexity instead, where
    the default admits only singletons).  Returns (x, y, z) or None.
    """
    if ablate not in ("convexity", "closedness", "boundedness", "none"):
        raise ValueError(f"unknown ablation {ablate!r}")
    elements = sorted(universe, key=lambda e: str(inst.serialize(e)))
    if convexity_test is None:
        convexity_test = lambda e: any(is_n_convex(inst, e, n) for n in range(2, m_cap + 1))
    convexish = {id(e): convexity_test(e) for e in elements}
    closed = {id(e): inst.closure is None or inst.eq(inst.closure(e), e) for e in elements}

    def y_admits(y) -> bool:
        if ablate == "convexity":
            return not convexish[id(y)]
        if ablate == "closedness":
            return not closed[id(y)]
        if ablate == "boundedness":
            return False  # every element of a finite universe is bounded
        return convexish[id(y)] and closed[id(y)]

    for x in elements:
        for y in elements:
            if not y_admits(y):
                continue
            if inst.leq(x, y):
                continue
            for z in elements:
                if inst.leq(inst.add(x, z), inst.add(y, z)):
                    return (x, y, z)
    return None


def hull_props_check(
    inst: CornetInstance, seed: int = 0, cases: int = 50, n_max: int = 6
) -> list[LawReport]:
    """Property suite for the all-n convex hull map exposed by an instance."""
    if inst.hull is None:
        raise ValueError(f"instance {inst.name} exposes no hull map")
    hull = inst.hull
    names = [
        "hull-extensive",
        "hull-idempotent",
        "hull-monotone",
        "hull-convex",
        "hull-subadditive",
        "hull-star-compatible",
        "hull-minimal",
    ]
    reports = {n: LawReport(n, cases) for n in names}
    t0 = time.perf_counter()
    for i in range(cases):
        rng = case_rng(seed, i)
        x, y = inst.sampler(rng), inst.sampler(rng)
        hx, hy = hull(x), hull(y)
        if not inst.leq(x, hx):
            reports["hull-extensive"].record(inst.serialize(x))
        if not inst.eq(hull(hx), hx):
            reports["hull-idempotent"].record(inst.serialize(x))
        big = inst.add(x, y)
        if inst.leq(x, big) and not inst.leq(hx, hull(big)):
            reports["hull-monotone"].record((inst.serialize(x), inst.serialize(big)))
        for n in range(2, n_max + 1):
            if not is_n_convex(inst, hx, n):
                reports["hull-convex"].record((n, inst.serialize(x)))
        if not inst.leq(hull(inst.add(x, y)), inst.add(hx, hy)):
            reports["hull-subadditive"].record((inst.serialize(x), inst.serialize(y)))
        m = 2 + (i % 3)
        if not inst.leq(hull(inst.star(m, x)), inst.star(m, hx)):
            reports["hull-star-compatible"].record((m, inst.serialize(x)))
        # Minimality against constructed convex majorants of x.
        if inst.nonneg_sampler is not None:
            z = hull(inst.add(x, inst.nonneg_sampler(rng)))
            if inst.leq(x, z) and not inst.leq(hx, z):
                reports["hull-minimal"].record((inst.serialize(x), inst.serialize(z)))
    elapsed = time.perf_counter() - t0
    for r in reports.values():
        r.elapsed = elapsed / len(reports)
    return [reports[n] for n in names]


def n_continuity_probe(
    inst: CornetInstance, n: int, families: Sequence[Sequence[Any]]
) -> LawReport:
    """Compare inf(n*H) with n*inf(H) on finite families.

    Strict gaps are recorded as findings, not failures: the identity is a
    hypothesis on the structure, not an asserted law.
    """
    if inst.finite_inf is None:
        raise ValueError(f"instance {inst.name} exposes no finite_inf")
    report = LawReport("n-continuity-probe", len(families))
    t0 = time.perf_counter()
    equal = 0
    for hfam in families:
        lhs = inst.finite_inf([inst.star(n, hh) for hh in hfam])
        rhs = inst.star(n, inst.finite_inf(list(hfam)))
        if inst.eq(lhs, rhs):
            equal += 1
        else:
            report.notes.append(
                ("gap", [inst.serialize(hh) for hh in hfam], inst.serialize(lhs), inst.serialize(rhs))
            )
    report.notes.insert(0, ("equalities", equal, "of", len(families)))
    report.elapsed = time.perf_counter() - t0
    return report
