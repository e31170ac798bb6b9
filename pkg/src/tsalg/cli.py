"""Command-line interface. JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 a check or decision came out negative,
2 input error, 3 inconclusive at the given bound.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .actions import ActionLawError, restrict_action
from .catalog import find_catalog
from .galois import point_stabilizers, search_chr
from .groups import GroupError, Subgroup, sylow_subgroup
from .induction import product_induce, tensor_induce
from .modules import ModuleError, algebra_socle, fixed_points, higman_witness, hom_space, is_simple
from .parallel import set_default_workers
from .poly import ParseError
from .registry import UnknownFixture, fixture_names, run_fixture
from .spec_io import SCHEMA, SpecError, dumps, group_to_json, loads_module, loads_spec, module_from_json, \
    spec_from_action
from .trace import (FOUND, NONE_GRADED_EXACT, invariant_basis, is_trace_surjective, rel_trace,
                    subalgebra_contains, trace_full, verify_invariant)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


class InputError(Exception):
    def __init__(self, message: str, pointer: str | None = None, extra: dict | None = None):
        super().__init__(message)
        self.pointer = pointer
        self.extra = extra or {}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return loads_spec(_read(path))


def _poly(A, text: str):
    try:
        return A.parse(text)
    except (ParseError, KeyError) as exc:
        raise InputError(f"bad polynomial {text!r}: {exc}") from None


def _subgroup(spec, which: str | None) -> Subgroup:
    """Resolve 'spec', 'sylow', 'all' or a comma-separated element list."""
    G = spec.group
    if which in (None, "spec"):
        if spec.subgroup is None:
            if which == "spec":
                raise InputError("spec has no subgroup")
            return G.whole()
        return spec.subgroup
    if which == "all":
        return G.whole()
    if which == "sylow":
        return sylow_subgroup(G, spec.action.p)
    try:
        els = [int(x) for x in which.split(",") if x.strip()]
        return Subgroup(G, els)
    except ValueError as exc:
        raise InputError(f"bad subgroup {which!r}: {exc}") from None


def _acting_subgroup(spec, H: Subgroup) -> Subgroup:
    """H as a subgroup of the group the action is defined on."""
    if spec.action.group is spec.group:
        return H
    if spec.doc.action_on == "subgroup" and H == spec.subgroup:
        return spec.action.group.whole()
    raise InputError("the action is defined on the subgroup only; use --subgroup spec")


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


def _point_exit(status: str) -> int:
    if status == FOUND:
        return EXIT_OK
    return EXIT_FAILED if status == NONE_GRADED_EXACT else EXIT_INCONCLUSIVE


# --- commands --------------------------------------------------------------

def cmd_validate(args) -> int:
    spec = _load(args.spec)
    A = spec.action
    _emit({
        "filtration_preserving": A.filtration_preserving,
        "graded": A.graded,
        "group_order": spec.group.order,
        "nvars": A.nvars,
        "p": A.p,
        "subgroup": None if spec.subgroup is None else list(spec.subgroup.elements),
        "valid": True,
    })
    return EXIT_OK


def cmd_trace(args) -> int:
    spec = _load(args.spec)
    A = spec.action
    f = _poly(A, args.poly)
    t = trace_full(A, f)
    _emit({"input": str(f), "is_one": t == 1, "trace": str(t), "trace_invariant": verify_invariant(A, t)})
    return EXIT_OK


def cmd_rel_trace(args) -> int:
    spec = _load(args.spec)
    A = spec.action
    H = _acting_subgroup(spec, _subgroup(spec, args.subgroup))
    Y = _acting_subgroup(spec, _subgroup(spec, args.over)) if args.over else A.group.whole()
    f = _poly(A, args.poly)
    try:
        t = rel_trace(A, H, Y, f)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({"from": list(H.elements), "input": str(f), "result": str(t), "to": list(Y.elements)})
    return EXIT_OK


def cmd_find_point(args) -> int:
    A = _load(args.spec).action
    res = is_trace_surjective(A, args.max_degree, use_sylow=not args.no_sylow, workers=args.workers)
    _emit(res.to_json())
    return _point_exit(res.status)


def cmd_check_ts(args) -> int:
    A = _load(args.spec).action
    res = is_trace_surjective(A, args.max_degree, use_sylow=not args.no_sylow, workers=args.workers)
    verdict = {FOUND: True, NONE_GRADED_EXACT: False}.get(res.status)
    _emit({"result": res.to_json(), "trace_surjective": verdict})
    return _point_exit(res.status)


def cmd_invariants(args) -> int:
    A = _load(args.spec).action
    try:
        basis = invariant_basis(A, args.degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({"basis": [str(f) for f in basis], "degree": args.degree, "dimension": len(basis),
           "graded": A.graded})
    return EXIT_OK


def cmd_member(args) -> int:
    A = _load(args.spec).action
    try:
        gens_doc = json.loads(_read(args.gens))
    except json.JSONDecodeError as exc:
        raise InputError(f"generator file is not JSON: {exc.msg}") from None
    if not isinstance(gens_doc, list) or not all(isinstance(x, str) for x in gens_doc):
        raise InputError("generator file must be a JSON array of polynomial strings")
    gens = [_poly(A, x) for x in gens_doc]
    target = _poly(A, args.target)
    try:
        found = subalgebra_contains(gens, target, args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit({"cap": args.cap, "member": found, "target": str(target),
           "verdict": "member" if found else "not_at_cap"})
    return EXIT_OK if found else EXIT_INCONCLUSIVE


def _base_action_and_section(spec):
    if spec.subgroup is None:
        raise InputError("induction needs a 'subgroup' in the spec")
    if spec.doc.action_on == "subgroup":
        return spec.action, spec.section
    return restrict_action(spec.action, spec.subgroup), spec.section


def cmd_induce(args) -> int:
    spec = _load(args.spec)
    A, R = _base_action_and_section(spec)
    if args.mode == "tensor":
        ind = tensor_induce(A, R)
        doc = spec_from_action(ind, group_json=group_to_json(spec.group),
                               metadata={"induced_from": {"cross_section": list(R.reps),
                                                          "mode": "tensor",
                                                          "subgroup": list(R.subgroup.elements)}})
        _emit(doc.to_json())
        return EXIT_OK
    T = product_induce(A, R)
    G = R.group
    gens = []
    for g in G.generators:
        moves = []
        for j in range(R.index):
            h, k = R.coset_of(G.mult[R.reps[j]][g])
            moves.append({"from_slot": j, "subgroup_element": h, "to_slot": k})
        gens.append({"element": g, "slots": moves})
    _emit({
        "base": spec_from_action(A).to_json(),
        "components": T.components,
        "cross_section": list(R.reps),
        "generator_actions": gens,
        "group": group_to_json(G),
        "mode": "product",
        "rule": "slot to_slot of (t g) is (slot from_slot of t) acted on by subgroup_element",
        "subgroup": list(R.subgroup.elements),
    })
    return EXIT_OK


def cmd_restrict(args) -> int:
    spec = _load(args.spec)
    H = _acting_subgroup(spec, _subgroup(spec, args.subgroup))
    res = restrict_action(spec.action, H)
    doc = spec_from_action(res, metadata={"restricted_to": list(H.elements)})
    _emit(doc.to_json())
    return EXIT_OK


def cmd_chr_search(args) -> int:
    spec = _load(args.spec)
    A = spec.action
    H = _acting_subgroup(spec, _subgroup(spec, args.subgroup or "all"))
    res = search_chr(A, H, args.y_degree, args.x_degree)
    out = res.to_json()
    out["subgroup"] = list(H.elements)
    _emit(out)
    return EXIT_OK if res.found else EXIT_INCONCLUSIVE


def cmd_stabilizers(args) -> int:
    A = _load(args.spec).action
    try:
        rep = point_stabilizers(A, args.ext_level, args.workers, max_bad_points=args.max_bad_points)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(rep.to_json())
    return EXIT_OK if rep.p_locally_free else EXIT_FAILED


def _load_simples(path: str, group, p: int):
    doc = json.loads(_read(path))
    items = doc["simples"] if isinstance(doc, dict) and "simples" in doc else doc
    if not isinstance(items, list):
        raise InputError("catalog must be a list of modules or an object with 'simples'")
    return [module_from_json({"p": p, "generator_matrices": m["generator_matrices"]}, group=group,
                             pointer=f"/simples/{i}") for i, m in enumerate(items)]


def cmd_socle(args) -> int:
    spec = _load(args.spec)
    A = spec.action
    if args.catalog:
        simples = _load_simples(args.catalog, A.group, A.p)
    else:
        simples = find_catalog(A.group, A.p)
        if simples is None:
            raise InputError("no shipped catalog matches this group; pass --catalog")
    try:
        gens = algebra_socle(A, args.degree, simples)
    except ModuleError as exc:
        raise InputError(str(exc)) from None
    _emit({"degree": args.degree, "socle_generators": [str(f) for f in gens]})
    return EXIT_OK


def cmd_module(args) -> int:
    M = loads_module(_read(args.module))
    if args.op == "fixed-points":
        basis = fixed_points(M)
        _emit({"basis": basis.tolist(), "dimension": int(basis.shape[0])})
        return EXIT_OK
    if args.op == "hom":
        if not args.other:
            raise InputError("hom needs --other")
        N = module_from_json(json.loads(_read(args.other)), group=M.group)
        basis = hom_space(M, N)
        _emit({"basis": [X.tolist() for X in basis], "dimension": len(basis)})
        return EXIT_OK
    if args.op == "simple":
        try:
            ok = is_simple(M)
        except ModuleError as exc:
            raise InputError(str(exc)) from None
        _emit({"dim": M.dim, "simple": ok})
        return EXIT_OK if ok else EXIT_FAILED
    if args.op in ("projective", "higman"):
        H = M.group.trivial()
        if args.subgroup:
            try:
                H = Subgroup(M.group, [int(x) for x in args.subgroup.split(",")])
            except (ValueError, GroupError) as exc:
                raise InputError(str(exc)) from None
        alpha = higman_witness(M, H)
        key = "projective" if args.op == "projective" else "relatively_projective"
        _emit({key: alpha is not None, "subgroup": list(H.elements),
               "witness": None if alpha is None else alpha.tolist()})
        return EXIT_OK if alpha is not None else EXIT_FAILED
    raise InputError(f"unknown module operation {args.op!r}")  # pragma: no cover


def cmd_fixture(args) -> int:
    if args.list:
        _emit({"fixtures": fixture_names()})
        return EXIT_OK
    names = fixture_names() if args.name == "all" else [args.name]
    reports = []
    for name in names:
        try:
            reports.append(run_fixture(name, workers=args.workers))
        except UnknownFixture:
            raise InputError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}") from None
    for r in reports:
        for c in r.checks:
            if c.status != "pass":
                print(f"{r.fixture}: {c.name}: {c.status}", file=sys.stderr)
    _emit(reports[0].to_json() if len(reports) == 1 else {"reports": [r.to_json() for r in reports]})
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_schema(args) -> int:
    _emit(SCHEMA)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tsalg", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"tsalg {__version__}")
    ap.add_argument("--workers", type=int, default=1, help="worker threads (output does not depend on it)")
    sub = ap.add_subparsers(dest="command", required=True)

    def spec_cmd(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec", help="spec JSON file, or - for stdin")
        p.set_defaults(fn=fn)
        return p

    spec_cmd("validate", cmd_validate, "parse and validate a spec")
    p = spec_cmd("trace", cmd_trace, "full trace of a polynomial")
    p.add_argument("--poly", required=True)
    p = spec_cmd("rel-trace", cmd_rel_trace, "relative trace from a subgroup")
    p.add_argument("--poly", required=True)
    p.add_argument("--subgroup", default="spec", help="spec, sylow, all or a comma list (default spec)")
    p.add_argument("--over", help="larger subgroup (default the whole group)")
    for name, fn in (("find-point", cmd_find_point), ("check-ts", cmd_check_ts)):
        p = spec_cmd(name, fn, "search for a point" if name == "find-point" else "decide trace-surjectivity")
        p.add_argument("--max-degree", type=int, default=2)
        p.add_argument("--no-sylow", action="store_true", help="search on the whole group")
    p = spec_cmd("invariants", cmd_invariants, "basis of invariants of one degree")
    p.add_argument("--degree", type=int, required=True)
    p = spec_cmd("member", cmd_member, "subalgebra membership up to a degree cap")
    p.add_argument("--gens", required=True, help="JSON array of polynomial strings")
    p.add_argument("--target", required=True)
    p.add_argument("--cap", type=int, required=True)
    p = spec_cmd("induce", cmd_induce, "induce the subgroup action to the group")
    p.add_argument("--mode", choices=("tensor", "product"), default="tensor")
    p = spec_cmd("restrict", cmd_restrict, "restrict to a subgroup")
    p.add_argument("--subgroup", default="spec")
    p = spec_cmd("chr-search", cmd_chr_search, "search for a Galois witness")
    p.add_argument("--y-degree", type=int, required=True)
    p.add_argument("--x-degree", type=int, required=True)
    p.add_argument("--subgroup", default="all", help="sylow, spec, all or a comma list (default all)")
    p = spec_cmd("stabilizers", cmd_stabilizers, "stabilizers of rational points")
    p.add_argument("--ext-level", type=int, default=1)
    p.add_argument("--max-bad-points", type=int, default=20)
    p = spec_cmd("socle", cmd_socle, "socle generators of the slices up to a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--catalog", help="JSON list of simple modules (default: shipped catalog)")

    p = sub.add_parser("module", help="module operations")
    p.add_argument("op", choices=("fixed-points", "hom", "simple", "projective", "higman"))
    p.add_argument("module", help="module JSON file, or - for stdin")
    p.add_argument("--other", help="second module for hom")
    p.add_argument("--subgroup", help="comma list for higman (default trivial subgroup)")
    p.set_defaults(fn=cmd_module)

    p = sub.add_parser("fixture", help="run a named fixture suite")
    p.add_argument("name", nargs="?", default="all")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_fixture)

    p = sub.add_parser("schema", help="print the spec JSON schema")
    p.set_defaults(fn=cmd_schema)
    return ap


def _fail(message: str, pointer: str | None = None, extra: dict | None = None) -> int:
    print(f"error: {message}", file=sys.stderr)
    out = {"error": message}
    if pointer is not None:
        out["pointer"] = pointer
    out.update(extra or {})
    _emit(out)
    return EXIT_INPUT


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.workers < 1:
        return _fail("--workers must be at least 1")
    set_default_workers(args.workers)
    try:
        return args.fn(args)
    except SpecError as exc:
        return _fail(exc.message, exc.pointer, exc.extra)
    except ActionLawError as exc:
        return _fail(str(exc), None, {"g": exc.g, "h": exc.h, "var": exc.var})
    except InputError as exc:
        return _fail(str(exc), exc.pointer, exc.extra)
    except (GroupError, ModuleError) as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
