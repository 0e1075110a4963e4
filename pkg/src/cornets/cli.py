"""Command-line harness: load instance files, run law suites, verify
cancellation, hunt counterexamples, emit reports.

Instance files are UTF-8 JSON describing one universe, its named elements and
an optional Archimedean family; unknown fields are rejected with a location
diagnostic.  Machine reports contain no timings, so identical inputs produce
byte-identical output regardless of the worker count.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Optional

from .core import (
    ArchFamily,
    CornetInstance,
    Horizon,
    LawReport,
    ablation_hunt,
    cancellation_check,
    case_rng,
    check_cornet_laws,
    check_lemma_identities,
    dot_mul,
    is_n_convex,
    merge_reports,
    subcornet_closure_suite,
)
from .fuzzy import (
    NoArchimedeanElements,
    StepFuzzy,
    chi_embed,
    fuzzy_arch_family,
    make_fuzzy_cornet,
    support,
)
from .geometry import rat
from .sets import (
    Repr,
    UnsupportedOperation,
    UpperSet,
    enumerate_z_subsets,
    interval_z_subsets,
    make_set_cornet,
    order_convex_z,
    phi_embed,
    set_arch_family,
)
from .wedges import NotPointedError, Wedge, elem_arch_family, make_elem_cornet

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class CliError(Exception):
    """Input problem; rendered with its location and mapped to exit code 2."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _require_keys(obj: dict, allowed: set, required: set, location: str) -> None:
    if not isinstance(obj, dict):
        raise CliError(f"expected an object, got {type(obj).__name__}", location)
    unknown = set(obj) - allowed
    if unknown:
        raise CliError(f"unknown field(s) {sorted(unknown)}", location)
    missing = required - set(obj)
    if missing:
        raise CliError(f"missing required field(s) {sorted(missing)}", location)


def _parse_rat(value, location: str) -> Fraction:
    try:
        return rat(value)
    except (ValueError, ZeroDivisionError) as e:
        raise CliError(f"bad rational {value!r} ({e})", location)


def _parse_wedge(spec, dim: int, location: str) -> Wedge:
    try:
        if spec == "orthant":
            return Wedge.orthant(dim)
        if spec == "zero":
            return Wedge.zero(dim)
        if isinstance(spec, dict):
            _require_keys(spec, {"rows"}, {"rows"}, location)
            rows = spec["rows"]
            if not isinstance(rows, list) or not rows:
                raise CliError("rows must be a nonempty list", location)
            parsed = [
                [_parse_rat(c, f"{location}.rows[{i}]") for c in row]
                for i, row in enumerate(rows)
            ]
            if any(len(r) != dim for r in parsed):
                raise CliError(f"every row must have {dim} entries", location)
            return Wedge.from_rows(parsed)
    except NotPointedError as e:
        raise CliError(str(e), location)
    raise CliError(f"wedge must be \"orthant\", \"zero\" or {{\"rows\": ...}}, got {spec!r}", location)


def _parse_set(obj, w: Wedge, location: str, integer: bool = False) -> UpperSet:
    _require_keys(obj, {"repr", "generators"}, {"repr", "generators"}, location)
    try:
        rp = Repr(obj["repr"])
    except ValueError:
        raise CliError(f"repr must be \"discrete\" or \"polytopic\", got {obj['repr']!r}", location)
    gens = obj["generators"]
    if not isinstance(gens, list) or not gens:
        raise CliError("generators must be a nonempty list", location)
    parsed = []
    for i, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != w.dim:
            raise CliError(f"generator must be a list of {w.dim} rationals", f"{location}.generators[{i}]")
        row = [_parse_rat(c, f"{location}.generators[{i}]") for c in g]
        if integer and any(c.denominator != 1 for c in row):
            raise CliError("integer universe requires integer generators", f"{location}.generators[{i}]")
        parsed.append(row)
    try:
        return UpperSet.make(w, rp, parsed)
    except ValueError as e:
        raise CliError(str(e), location)


def _parse_fuzzy(obj, w: Wedge, p: Fraction, location: str) -> StepFuzzy:
    _require_keys(obj, {"p", "levels"}, {"levels"}, location)
    fp = _parse_rat(obj.get("p", p), f"{location}.p")
    levels = obj["levels"]
    if not isinstance(levels, list) or not levels:
        raise CliError("levels must be a nonempty list", location)
    parsed = []
    for i, lv in enumerate(levels):
        loc = f"{location}.levels[{i}]"
        _require_keys(lv, {"alpha", "set"}, {"alpha", "set"}, loc)
        parsed.append((_parse_rat(lv["alpha"], loc), _parse_set(lv["set"], w, f"{loc}.set")))
    try:
        return StepFuzzy.make(w, fp, parsed)
    except ValueError as e:
        raise CliError(str(e), location)


_KINDS = ("elemQ", "setQ", "setZ", "fuzzyQ")


@dataclasses.dataclass
class Loaded:
    kind: str
    wedge: Wedge
    inst: CornetInstance
    elements: dict[str, Any]
    family: Optional[ArchFamily]
    family_note: Optional[str]
    options: dict
    p: Fraction


def _parse_element(kind: str, raw, w: Wedge, p: Fraction, location: str):
    if kind == "elemQ":
        if not isinstance(raw, list) or len(raw) != w.dim:
            raise CliError(f"element must be a list of {w.dim} rationals", location)
        return tuple(_parse_rat(c, location) for c in raw)
    if kind in ("setQ", "setZ"):
        return _parse_set(raw, w, location, integer=(kind == "setZ"))
    return _parse_fuzzy(raw, w, p, location)


def load_instance(path: str) -> Loaded:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read instance file ({e})", path)
    except json.JSONDecodeError as e:
        raise CliError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}", path)
    _require_keys(data, {"universe", "elements", "family", "options"}, {"universe"}, "$")

    uni = data["universe"]
    _require_keys(uni, {"kind", "dim", "wedge", "repr", "p"}, {"kind", "dim", "wedge"}, "$.universe")
    kind = uni["kind"]
    if kind not in _KINDS:
        raise CliError(f"kind must be one of {list(_KINDS)}, got {kind!r}", "$.universe.kind")
    dim = uni["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise CliError(f"dim must be a positive integer, got {dim!r}", "$.universe.dim")
    w = _parse_wedge(uni["wedge"], dim, "$.universe.wedge")

    rp = Repr.DISCRETE
    if "repr" in uni:
        if kind == "elemQ":
            raise CliError("repr does not apply to elemQ", "$.universe.repr")
        try:
            rp = Repr(uni["repr"])
        except ValueError:
            raise CliError(f"repr must be \"discrete\" or \"polytopic\", got {uni['repr']!r}", "$.universe.repr")
    p = Fraction(1)
    if "p" in uni:
        if kind != "fuzzyQ":
            raise CliError("p applies only to fuzzyQ", "$.universe.p")
        p = _parse_rat(uni["p"], "$.universe.p")
        if not (0 < p <= 1):
            raise CliError(f"p must lie in (0, 1], got {p}", "$.universe.p")
    if kind == "setZ":
        if dim != 1 or not w.is_zero:
            raise CliError("setZ requires dim 1 and the zero wedge", "$.universe")
        if rp is not Repr.DISCRETE:
            raise CliError("setZ supports only discrete sets", "$.universe.repr")

    options = data.get("options", {})
    _require_keys(options, {"n_max", "horizon", "seed", "cases", "mutate"}, set(), "$.options")
    for key in ("n_max", "horizon", "seed", "cases"):
        if key in options and not (isinstance(options[key], int) and not isinstance(options[key], bool)):
            raise CliError(f"{key} must be an integer", f"$.options.{key}")

    if kind == "elemQ":
        inst = make_elem_cornet(w)
    elif kind == "setQ":
        inst = make_set_cornet(w, rp)
    elif kind == "setZ":
        inst = make_set_cornet(w, Repr.DISCRETE, integer=True)
    else:
        inst = make_fuzzy_cornet(w, p, rp)

    mutate = options.get("mutate")
    if mutate is not None:
        if mutate != "star-dot":
            raise CliError(f"unknown mutation {mutate!r}", "$.options.mutate")
        base = inst
        inst = dataclasses.replace(
            inst,
            name=f"{inst.name}[star-dot]",
            star=lambda n, x: dot_mul(base, n, x),
        )

    elements = {}
    raw_elements = data.get("elements", {})
    if not isinstance(raw_elements, dict):
        raise CliError("elements must be an object", "$.elements")
    for name, raw in raw_elements.items():
        elements[name] = _parse_element(kind, raw, w, p, f"$.elements.{name}")

    fam_spec = data.get("family", {"epsilons": ["1", "1/2"]})
    _require_keys(fam_spec, {"epsilons"}, {"epsilons"}, "$.family")
    epsilons = [_parse_rat(e, "$.family.epsilons") for e in fam_spec["epsilons"]]
    if any(e <= 0 for e in epsilons):
        raise CliError("epsilons must be positive", "$.family.epsilons")
    family, family_note = None, None
    try:
        if kind == "elemQ":
            family = elem_arch_family(w, epsilons)
        elif kind in ("setQ", "setZ"):
            family = set_arch_family(w, epsilons)
        else:
            family = fuzzy_arch_family(w, epsilons, p)
    except NoArchimedeanElements:
        family_note = "no Archimedean elements below the top membership level; family skipped"
    except ValueError as e:
        family_note = f"no Archimedean family over this wedge ({e}); family skipped"

    return Loaded(kind, w, inst, elements, family, family_note, options, p)


# --- Reports -----------------------------------------------------------------


def _law_json(r: LawReport) -> dict:
    return {
        "law": r.law,
        "cases": r.cases,
        "passed": r.passed,
        "violations": r.violations,
        "notes": r.notes,
    }


def emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2, default=str))
        return
    print(f"== {report['command']} :: {report.get('instance', '-')} ==")
    for r in report.get("laws", ()):
        mark = "PASS" if r["passed"] else "FAIL"
        line = f"  [{mark}] {r['law']} ({r['cases']} cases)"
        print(line)
        for v in r["violations"]:
            print(f"         counterexample: {v}")
    for key in ("hypotheses", "premise", "conclusion", "chain", "result", "found", "notes"):
        if key in report and report[key] not in (None, [], {}):
            print(f"  {key}: {report[key]}")
    print(f"  status: {report['status']}")


def _chunks(cases: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, min(jobs, cases)) if cases else 1
    base, rem = divmod(cases, jobs)
    out, start = [], 0
    for i in range(jobs):
        size = base + (1 if i < rem else 0)
        out.append((start, size))
        start += size
    return [(s, c) for s, c in out if c]


def _run_chunked(fn, cases: int, jobs: int) -> list[LawReport]:
    parts = _chunks(cases, jobs)
    if len(parts) == 1:
        return fn(parts[0][0], parts[0][1])
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        results = list(pool.map(lambda sc: fn(sc[0], sc[1]), parts))
    return merge_reports(results)


def _opt(args_value, options: dict, key: str, default: int) -> int:
    if args_value is not None:
        return args_value
    return options.get(key, default)


# --- Commands ----------------------------------------------------------------


def cmd_laws(args) -> int:
    loaded = load_instance(args.file)
    inst = loaded.inst
    cases = _opt(args.cases, loaded.options, "cases", 200)
    seed = _opt(args.seed, loaded.options, "seed", 0)
    n_max = _opt(args.max_n, loaded.options, "n_max", 6)
    horizon = _opt(args.horizon, loaded.options, "horizon", 12)
    jobs = args.jobs or 1

    laws = _run_chunked(
        lambda start, count: check_cornet_laws(inst, seed, count, n_max, start),
        cases,
        jobs,
    )
    laws += _run_chunked(
        lambda start, count: check_lemma_identities(inst, seed, count, n_max, start),
        max(1, cases // 2),
        jobs,
    )
    notes = []
    if loaded.family is not None:
        probes = tuple(inst.sampler(case_rng(seed, 2**30 + k)) for k in range(2))
        h = Horizon(horizon, probes)
        laws += subcornet_closure_suite(inst, loaded.family, seed, min(cases, 50), h)
    else:
        notes.append(loaded.family_note)

    status = "pass" if all(r.passed for r in laws) else "fail"
    report = {
        "command": "laws",
        "instance": inst.name,
        "params": {"cases": cases, "seed": seed, "n_max": n_max, "horizon": horizon},
        "laws": [_law_json(r) for r in laws],
        "notes": notes,
        "status": status,
    }
    emit(report, args.format)
    return EXIT_PASS if status == "pass" else EXIT_VIOLATION


def cmd_cancel(args) -> int:
    loaded = load_instance(args.file)
    inst = loaded.inst
    for name in (args.x, args.y, args.z):
        if name not in loaded.elements:
            raise CliError(f"element {name!r} not defined in the instance file", "$.elements")
    if args.m < 2:
        raise CliError("--m must be >= 2")
    if loaded.family is None:
        raise CliError(loaded.family_note or "no Archimedean family available")
    x, y, z = loaded.elements[args.x], loaded.elements[args.y], loaded.elements[args.z]
    horizon = _opt(args.horizon, loaded.options, "horizon", 12)
    # Challenge elements whose comparison with y is undecidable in this
    # representation pair are skipped rather than failing the whole run.
    challenges = []
    for el in loaded.elements.values():
        try:
            inst.leq(el, y)
        except UnsupportedOperation:
            continue
        challenges.append(el)
    challenges = tuple(challenges)
    h = Horizon(horizon, challenges or (inst.zero,))
    try:
        record = cancellation_check(
            inst, x, y, z, args.m, loaded.family, h, challenges, replay=True
        )
    except UnsupportedOperation as e:
        raise CliError(f"order comparison undecidable for these representations ({e})")
    report = {
        "command": "cancel",
        "instance": inst.name,
        "params": {"x": args.x, "y": args.y, "z": args.z, "m": args.m, "horizon": horizon},
        "hypotheses": {
            "z-bounded": record.hypotheses["z-bounded"].verdict.value,
            "y-closed": record.hypotheses["y-closed"].verdict.value,
            "y-m-convex": record.hypotheses["y-m-convex"],
        },
        "premise": record.premise,
        "conclusion": record.conclusion,
        "chain": [list(link) for link in record.chain],
        "status": record.status,
    }
    emit(report, args.format)
    # Hypothesis or premise failures are informational; only a conclusion
    # failure (which would falsify the theorem) is a violation.
    return EXIT_VIOLATION if record.status == "ConclusionFailed" else EXIT_PASS


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split("..")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise CliError(f"range must look like \"0..3\", got {text!r}")
    if hi < lo:
        raise CliError(f"empty range {text!r}")
    return lo, hi


def cmd_hunt(args) -> int:
    lo, hi = _parse_range(args.range)
    if args.universe == "z1":
        universe = enumerate_z_subsets(hi, lo=lo)
    elif args.universe == "z1-intervals":
        universe = interval_z_subsets(hi, lo=lo)
    else:
        raise CliError(f"unknown universe {args.universe!r}")
    inst = make_set_cornet(Wedge.zero(1), Repr.DISCRETE, integer=True)
    found = ablation_hunt(inst, universe, args.ablate, convexity_test=order_convex_z)
    report = {
        "command": "hunt",
        "instance": inst.name,
        "params": {"universe": args.universe, "range": f"{lo}..{hi}", "ablate": args.ablate},
        "found": (
            {k: inst.serialize(e) for k, e in zip("xyz", found)} if found else None
        ),
        "searched": len(universe),
        "status": "counterexample" if found else "exhausted",
    }
    emit(report, args.format)
    return EXIT_VIOLATION if found else EXIT_PASS


def cmd_inspect(args) -> int:
    loaded = load_instance(args.file)
    inst = loaded.inst
    if args.element not in loaded.elements:
        raise CliError(f"element {args.element!r} not defined in the instance file", "$.elements")
    el = loaded.elements[args.element]
    op = args.op
    target = loaded.kind

    if op.startswith("convex:"):
        try:
            n = int(op.split(":", 1)[1])
        except ValueError:
            raise CliError(f"bad op {op!r}; expected convex:<n>")
        if n < 1:
            raise CliError("convex:<n> needs n >= 1")
        result = is_n_convex(inst, el, n)
    elif op == "hull":
        if inst.hull is None:
            raise CliError(f"hull is not applicable to {loaded.kind}")
        result = inst.serialize(inst.hull(el))
    elif op == "closure":
        if inst.closure is None:
            raise CliError(f"closure is not applicable to {loaded.kind}")
        result = inst.serialize(inst.closure(el))
    elif op == "support":
        if loaded.kind != "fuzzyQ":
            raise CliError("support applies only to fuzzyQ")
        cut = support(el)
        result = {
            "repr": cut.repr.value,
            "generators": [[str(c) for c in g] for g in cut.generators],
        }
    elif op == "embed":
        if loaded.kind == "elemQ":
            target = "setQ"
            image = phi_embed(loaded.wedge, el)
            result = {
                "repr": image.repr.value,
                "generators": [[str(c) for c in g] for g in image.generators],
            }
        elif loaded.kind in ("setQ", "setZ"):
            target = "fuzzyQ"
            fz = chi_embed(el)
            result = {
                "p": str(fz.p),
                "levels": [
                    {
                        "alpha": str(a),
                        "set": {
                            "repr": c.repr.value,
                            "generators": [[str(v) for v in g] for g in c.generators],
                        },
                    }
                    for a, c in fz.levels
                ],
            }
        else:
            raise CliError("embed applies to elemQ and setQ/setZ only")
    else:
        raise CliError(f"unknown op {op!r}")

    report = {
        "command": "inspect",
        "instance": inst.name,
        "params": {"element": args.element, "op": op},
        "target": target,
        "result": result,
        "status": "pass",
    }
    emit(report, args.format)
    return EXIT_PASS


# --- Entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cornets",
        description="Law checking, cancellation and counterexample hunting for exact rational cornets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("laws", help="run the cornet law and lemma suites on an instance file")
    p.add_argument("file")
    p.add_argument("--cases", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--horizon", type=int)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(fn=cmd_laws)

    p = sub.add_parser("cancel", help="verify a cancellation-theorem instance")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--horizon", type=int)
    common(p)
    p.set_defaults(fn=cmd_cancel)

    p = sub.add_parser("hunt", help="search a finite integer universe for cancellation failures")
    p.add_argument("--universe", choices=("z1", "z1-intervals"), default="z1")
    p.add_argument("--range", default="0..3")
    p.add_argument(
        "--ablate",
        choices=("convexity", "closedness", "boundedness", "none"),
        default="none",
    )
    common(p)
    p.set_defaults(fn=cmd_hunt)

    p = sub.add_parser("inspect", help="apply a structural operation to a named element")
    p.add_argument("file")
    p.add_argument("--element", required=True)
    p.add_argument("--op", required=True)
    common(p)
    p.set_defaults(fn=cmd_inspect)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
