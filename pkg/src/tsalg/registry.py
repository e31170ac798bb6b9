"""Named fixture suites and their reports.

Each fixture runs a fixed list of checks on shipped data. Randomized checks
draw from ``random.Random(seed)`` so reports are byte-identical across runs
and worker counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import linalg
from .actions import (AlgebraMorphism, d_reg, dehomogenize, is_equivariant_morphism, is_unitriangular,
                      linear_action, morphism_linear_part, point_morphism, restrict_action)
from .catalog import CATALOG_GROUPS, catalog_group, load_catalog, load_spec
from .galois import point_stabilizers, search_chr, stabilizer_of, verify_chr
from .groups import CrossSection, GroupTable, Subgroup, cross_section, cyclic_group, p_core, sylow_subgroup
from .induction import (chi, check_normalized_splitting, composite_f_trace_is_identity, frobenius_embedding,
                        induce_morphism_tensor, induced_product_point, induced_tensor_point, iota1_star,
                        pi1_star, product_induce, psi, shifted_section, tensor_induce, triangle_identities,
                        unit_counit, WreathElement)
from .modules import (direct_sum, find_isomorphism, fixed_points, graded_slice_module, hom_space,
                      higman_witness, is_projective_module, is_simple, make_module, permutation_module,
                      regular_module, slice_socle, socle, submodule_span, tensor_product,
                      trivial_module)
from .poly import Polynomial
from .sampling import (morphism_res_dreg_to, random_point, random_tuple_point, section_points,
                       tuple_point_morphism)
from .fields import ExtField
from .trace import (find_point, invariant_basis, is_trace_surjective, restrict_point, subalgebra_contains,
                    trace_full, trace_kernel_basis, verify_invariant)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
SEED = 20240601


class UnknownFixture(KeyError):
    pass


@dataclass
class Check:
    name: str
    statement: str
    status: str
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "payload": self.payload, "statement": self.statement, "status": self.status}


@dataclass
class FixtureReport:
    fixture: str
    checks: list

    @property
    def passed(self) -> bool:
        # inconclusive counts as failure: fixtures are chosen to be decisive
        return all(c.status == PASS for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "checks": [c.to_json() for c in self.checks],
            "fixture": self.fixture,
            "passed": self.passed,
            "summary": {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, INCONCLUSIVE)},
        }


def _ok(cond: bool) -> str:
    return PASS if cond else FAIL


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[Check] = []

    def add(self, name: str, statement: str, cond, payload: dict | None = None) -> bool:
        status = cond if isinstance(cond, str) else _ok(bool(cond))
        self.checks.append(Check(name, statement, status, payload or {}))
        return status == PASS

    def report(self) -> FixtureReport:
        return FixtureReport(self.name, self.checks)


def hilbert_series_c4(max_degree: int) -> list[int]:
    """Coefficients of (1 - t^6) / ((1 - t)(1 - t^2)(1 - t^3)(1 - t^4)) for degrees 0..max_degree."""
    coeffs = [1] + [0] * max_degree
    for k in (1, 2, 3, 4):
        for d in range(k, max_degree + 1):
            coeffs[d] += coeffs[d - k]
    return [coeffs[d] - (coeffs[d - 6] if d >= 6 else 0) for d in range(max_degree + 1)]


def _strs(polys) -> list[str]:
    return [str(f) for f in polys]


def _contains_rows(big: np.ndarray, small: np.ndarray, p: int) -> bool:
    if small.shape[0] == 0:
        return True
    return linalg.rank(np.vstack([big, small]), p) == linalg.rank(big, p)


def _stabilizer_summary(report) -> dict:
    return {"levels": [{"level": r.level, "p_locally_free": r.p_locally_free, "points_checked": r.points_checked,
                        "worst_stabilizer_order": r.worst_stabilizer_order} for r in report.levels],
            "p_locally_free": report.p_locally_free}


# --- c4-paper ----------------------------------------------------------------

C4_F2 = "x1*x2 + x2^2"
C4_F3 = "x1^2*x3 + x1*x2^2 + x1*x3^2 + x2^3"
C4_F4 = "x1^2*x2*x3 + x1^2*x3^2 + x1*x2^2*x3 + x1*x2*x3^2 + x2^2*x3^2 + x3^4"


def c4_invariants(A):
    return A.parse("x1"), A.parse(C4_F2), A.parse(C4_F3), A.parse(C4_F4)


def fixture_c4_paper(workers: int = 1) -> FixtureReport:
    s = _Suite("c4-paper")
    A = load_spec("c4-paper").action
    x1, f2, f3, f4 = c4_invariants(A)
    g = A.group.generators[0]
    s.add("action_on_x3", "the generator sends x3 to x3 + x2 and its square sends x3 to x3 + x1",
          A.act(A.parse("x3"), g) == A.parse("x3 + x2")
          and A.act(A.parse("x3"), A.group.power(g, 2)) == A.parse("x3 + x1"),
          {"g": str(A.act(A.parse("x3"), g)), "g^2": str(A.act(A.parse("x3"), A.group.power(g, 2)))})
    s.add("generators_invariant", "x1, f2, f3 and f4 are fixed by the group",
          all(verify_invariant(A, f) for f in (x1, f2, f3, f4)), {"f2": str(f2), "f3": str(f3), "f4": str(f4)})
    s.add("x2_not_invariant", "x2 is moved by the group", not verify_invariant(A, A.parse("x2")))
    rel = x1 * x1 * f4 - f2 ** 3 - x1 * f2 * f3 - f3 * f3
    s.add("relation_vanishes", "x1^2 f4 - f2^3 - x1 f2 f3 - f3^2 is the zero polynomial",
          rel.is_zero(), {"value": str(rel)})
    t = trace_full(A, A.parse("x1*x2*x3"))
    s.add("trace_x1x2x3", "the trace of x1 x2 x3 is x1^3", t == A.parse("x1^3"), {"trace": str(t)})
    s.add("trace_one", "the trace of 1 is |G| = 0", trace_full(A, A.ring.one()).is_zero())
    dims = [len(invariant_basis(A, d)) for d in range(1, 7)]
    expected = hilbert_series_c4(6)[1:]
    s.add("invariant_dimensions", "invariant dimensions in degrees 1..6 match the Hilbert series of "
          "a polynomial ring on generators of degrees 1,2,3,4 modulo one relation in degree 6",
          dims == expected, {"computed": dims, "expected": expected})
    s.add("degree_one_invariants", "the degree-1 invariants are spanned by x1",
          _strs(invariant_basis(A, 1)) == ["x1"], {"basis": _strs(invariant_basis(A, 1))})
    s.add("relation_in_subalgebra", "the relation lies in the subalgebra generated by x1, f2, f3, f4 up to degree 6",
          subalgebra_contains([x1, f2, f3, f4], x1 * x1 * f4 + f2 ** 3 + x1 * f2 * f3 + f3 * f3, 6))
    res = find_point(A, 3, workers)
    s.add("graded_no_point", "a graded action of a group of order divisible by p has no point",
          res.status == "none_graded_exact", res.to_json())
    s.add("unitriangular", "the linear action is lower unitriangular in the variable order x1, x2, x3",
          is_unitriangular(A))
    m = AlgebraMorphism(A, A, tuple(A.images[g]))
    L = morphism_linear_part(m)
    s.add("morphism_linear_part", "the linear part of an equivariant linear endomorphism intertwines the "
          "degree-1 slice module", is_equivariant_morphism(m) and np.array_equal(L, A.linear_matrix(g)),
          {"matrix": L.tolist()})
    rep = point_stabilizers(A, 1, workers)
    s.add("stabilizers_not_free", "some rational point has stabilizer order divisible by p",
          not rep.p_locally_free, _stabilizer_summary(rep))
    res = search_chr(A, A.group.whole(), 2, 2)
    s.add("chr_none_at_bound", "no Galois witness with degrees at most (2, 2)", res.status == "none_at_bound",
          res.to_json())
    return s.report()


# --- c4-dehom ------------------------------------------------------------------

def fixture_c4_dehom(workers: int = 1) -> FixtureReport:
    s = _Suite("c4-dehom")
    paper = load_spec("c4-paper").action
    D = load_spec("c4-dehom").action
    derived = dehomogenize(paper, paper.parse("x1"))
    s.add("dehomogenization", "setting x1 = 1 gives the shipped action on x2, x3",
          derived.images == D.images and derived.vars == D.vars, {"vars": list(derived.vars)})
    res = find_point(D, 2, workers)
    point = res.witness
    s.add("point_x2x3", "x2 x3 is a point of minimal degree", res.found and point == D.parse("x2*x3")
          and trace_full(D, point) == 1, res.to_json())
    rep = point_stabilizers(D, 3, workers)
    s.add("stabilizers_free", "every rational point over F_2, F_4, F_8 has trivial stabilizer",
          rep.p_locally_free and rep.worst_stabilizer_order == 1, _stabilizer_summary(rep))
    lam = D.parse("x2*x3")
    gens = [lam] + trace_kernel_basis(D, 2)
    members = {v: subalgebra_contains(gens, D.parse(v), 4) for v in D.vars}
    s.add("generated_by_points", "each variable lies in the subalgebra generated by the point and the degree <= 2 "
          "trace kernel, products up to degree 4", all(members.values()),
          {"kernel_dim": len(gens) - 1, "members": members})
    inv = invariant_basis(D, 2)
    s.add("invariants_are_traces", "every invariant u of degree <= 2 equals tr(u * point)",
          all(trace_full(D, u * lam) == u for u in inv), {"invariants": _strs(inv)})
    ts = is_trace_surjective(D, 2, workers=workers)
    s.add("trace_surjective", "the Sylow search finds a point", ts.found and trace_full(D, ts.witness) == 1,
          ts.to_json())
    return s.report()


# --- c2-dreg -------------------------------------------------------------------

def fixture_c2_dreg(workers: int = 1) -> FixtureReport:
    s = _Suite("c2-dreg")
    A = load_spec("c2-dreg").action
    built = d_reg(A.group, 2)
    s.add("d_reg_matches", "the dehomogenized regular algebra of C2 sends y to 1 + y",
          built == A and A.act(A.parse("y_1"), 1) == A.parse("y_1 + 1"))
    t = trace_full(A, A.parse("y_1"))
    s.add("trace_y", "tr(y) = y + (1 + y) = 1", t == 1, {"trace": str(t)})
    res = find_point(A, 1, workers)
    s.add("find_point", "y is a point of degree 1", res.found and res.witness == A.parse("y_1"), res.to_json())
    y, one = A.parse("y_1"), A.ring.one()
    hand = [(one, y), (one + y, one)]
    G = A.group.whole()
    s.add("chr_hand_witness", "the pairs (1, y), (1 + y, 1) are a Galois witness", verify_chr(A, G, hand))
    s.add("chr_partial_rejected", "the single pair (1, y) is not a Galois witness", not verify_chr(A, G, [(one, y)]))
    found = search_chr(A, G, 1, 1)
    s.add("chr_search", "a Galois witness exists with degrees at most (1, 1)",
          found.found and verify_chr(A, G, found.witness.pairs), found.to_json())
    gens = [res.witness] + trace_kernel_basis(A, 2)
    s.add("generated_by_points", "y lies in the subalgebra generated by the point and the degree <= 2 trace kernel",
          subalgebra_contains(gens, y, 4), {"kernel": _strs(gens[1:])})
    rep = point_stabilizers(A, 3, workers)
    s.add("stabilizers_free", "all rational points up to F_8 have trivial stabilizer", rep.p_locally_free,
          _stabilizer_summary(rep))
    shift = AlgebraMorphism(A, A, (A.parse("y_1 + 1"),))
    zero = AlgebraMorphism(A, A, (A.ring.zero(),))
    s.add("equivariant_morphisms", "y -> y + 1 is equivariant and y -> 0 is not",
          is_equivariant_morphism(shift) and not is_equivariant_morphism(zero))
    return s.report()


# --- c3-dreg -------------------------------------------------------------------

def fixture_c3_dreg(workers: int = 1) -> FixtureReport:
    s = _Suite("c3-dreg")
    A = load_spec("c3-dreg").action
    g = A.group.generators[0]
    s.add("d_reg_matches", "the shipped action is the dehomogenized regular algebra of C3 over F_3",
          d_reg(A.group, 3) == A)
    y = A.parse("y_1")
    s.add("order_three", "applying the generator three times is the identity",
          all(A.act(A.act(A.act(A.ring.var(i), g), g), g) == A.ring.var(i) for i in range(A.nvars)))
    s.add("trace_y", "tr(y_1) = 1", trace_full(A, y) == 1)
    res = find_point(A, 1, workers)
    s.add("find_point", "a point of degree 1 exists", res.found, res.to_json())
    rep = point_stabilizers(A, 3, workers)
    s.add("stabilizers_free", "all rational points up to F_27 have trivial stabilizer", rep.p_locally_free,
          _stabilizer_summary(rep))

    spec = load_spec("c3-dreg-in-s3")
    H_act, R = spec.action, spec.section
    a = H_act.parse("y_1")
    ind, cand, tr = induced_tensor_point(H_act, R, a)
    s.add("induced_tensor_point", "with m = 2, m^-1 times the slot-0 copy of an H-point is a G-point of the "
          "tensor-induced algebra", tr == 1, {"candidate": str(cand), "trace": str(tr), "m": R.index})
    T, cand_p, tr_p = induced_product_point(H_act, R, a)
    s.add("induced_product_point_literal", "m^-1 (a, 1, ..., 1) is a G-point of the product-induced algebra",
          T.is_one(tr_p), {"candidate": [str(f) for f in cand_p], "trace": [str(f) for f in tr_p]})
    hat = T.tuple([a] + [H_act.ring.one()] * (R.index - 1))
    expected = (1 + (R.index - 1) * R.subgroup.order) % A.p
    s.add("induced_product_trace_formula", "the G-trace of (a, 1, ..., 1) is tr_H(a) + (m - 1)|H|, "
          "constant in every slot", T.trace(hat) == T.const(expected), {"value": expected})
    e0 = section_points(T, a)
    s.add("induced_product_point_corrected", "(a, 0, ..., 0) is a G-point of the product-induced algebra",
          T.is_one(T.trace(e0)), {"candidate": [str(f) for f in e0]})
    return s.report()


# --- s3-perm -------------------------------------------------------------------

def _prop_socle_inclusions(A, simples, max_degree: int) -> tuple[bool, list]:
    """Per slice: invariants <= socle <= fixed points of the p-core."""
    core = p_core(A.group, A.p)
    rows = []
    ok = True
    for d in range(1, max_degree + 1):
        M, _ = graded_slice_module(A, d)
        soc = socle(M, simples, check_simple=False)
        fixed_core = fixed_points(M, core)
        fixed_all = fixed_points(M)
        upper = _contains_rows(fixed_core, soc, A.p)
        lower = _contains_rows(soc, fixed_all, A.p)
        ok = ok and upper and lower
        rows.append({"degree": d, "fixed_dim": int(fixed_all.shape[0]), "socle_dim": int(soc.shape[0]),
                     "core_fixed_dim": int(fixed_core.shape[0]), "invariants_in_socle": lower,
                     "socle_in_core_fixed": upper})
    return ok, rows


def fixture_s3_perm(workers: int = 1) -> FixtureReport:
    s = _Suite("s3-perm")
    A = load_spec("s3-perm").action
    G = A.group
    mats = [[[1 if A.images[g][i] == A.ring.var(j) else 0 for j in range(3)] for i in range(3)]
            for g in G.generators]
    s.add("permutation_action", "the shipped action is the linear action by permutation matrices",
          linear_action(3, G, mats, vars=A.vars) == A and A.graded)
    ts = is_trace_surjective(A, 2, workers=workers)
    s.add("not_trace_surjective", "graded with 3 dividing 6, so no point exists", ts.status == "none_graded_exact",
          ts.to_json())
    stab = stabilizer_of(A, (1, 1, 1), ExtField(3, 1))
    rep = point_stabilizers(A, 1, workers)
    s.add("diagonal_point_stabilizer", "(1, 1, 1) is fixed by all of S3 and 3 divides 6",
          len(stab) == 6 and not rep.p_locally_free, {"stabilizer": stab, **_stabilizer_summary(rep)})
    simples = load_catalog("S3", 3, group=G)
    soc = slice_socle(A, 1, simples)
    s.add("socle_degree_one", "the socle of the degree-1 slice is spanned by a + b + c",
          _strs(soc) == ["a + b + c"], {"socle": _strs(soc)})
    ok, rows = _prop_socle_inclusions(A, simples, 4)
    s.add("socle_between_invariants_and_core_fixed", "in every slice up to degree 4 the invariants lie in the "
          "socle and the socle lies in the fixed points of the largest normal p-subgroup", ok, {"slices": rows})
    P = permutation_module(G, 3)
    s.add("permutation_module_socle", "the permutation module has a one-dimensional socle spanned by (1, 1, 1)",
          socle(P, simples).tolist() == [[1, 1, 1]])
    s_sum = A.parse("a + b + c")
    m = AlgebraMorphism(A, A, tuple(v + s_sum for v in A.ring.gens()))
    L = morphism_linear_part(m)
    intertwines = all(np.array_equal(linalg.matmul(A.linear_matrix(g), L, 3), linalg.matmul(L, A.linear_matrix(g), 3))
                      for g in G.generators)
    s.add("linear_part_intertwines", "the linear part of the equivariant map v -> v + (a + b + c) commutes "
          "with the permutation matrices", is_equivariant_morphism(m) and intertwines, {"matrix": L.tolist()})
    return s.report()


# --- D_reg over several groups ----------------------------------------------------

DREG_CASES = (("C2", 2), ("C3", 3), ("C4", 2), ("S3", 3), ("C6", 3))


def dreg_case(group_name: str, p: int, workers: int = 1) -> dict:
    """Validate d_reg, trace its first variable and run the Sylow point search with lift."""
    G = catalog_group(group_name, p)
    A = d_reg(G, p)
    y = A.ring.var(0)
    P = sylow_subgroup(G, p)
    ts = is_trace_surjective(A, 1, use_sylow=True, workers=workers)
    lifted_ok = ts.found and trace_full(A, ts.witness) == 1
    restricted_ok = True
    if ts.found and "restricted_witness" in ts.details:
        res_a = restrict_action(A, P)
        w = res_a.parse(ts.details["restricted_witness"])
        restricted_ok = trace_full(res_a, w) == 1 and w.scale(pow(G.order // P.order, -1, p)) == ts.witness
    back = restrict_point(A, P, ts.witness) if ts.found else None
    back_ok = back is not None and trace_full(restrict_action(A, P), back) == 1
    return {
        "group": group_name, "p": p, "order": G.order, "sylow_order": P.order,
        "validates": A.filtration_preserving,
        "trace_y": str(trace_full(A, y)),
        "status": ts.status, "witness": None if ts.witness is None else str(ts.witness),
        "lift_is_point": lifted_ok, "restricted_is_point": restricted_ok, "restriction_back_is_point": back_ok,
        "ok": bool(trace_full(A, y) == 1 and lifted_ok and restricted_ok and back_ok),
    }


def fixture_s3_dreg(workers: int = 1) -> FixtureReport:
    s = _Suite("s3-dreg")
    A = load_spec("s3-dreg").action
    G = A.group
    s.add("d_reg_matches", "the shipped action is the dehomogenized regular algebra of S3 over F_3",
          d_reg(G, 3) == A)
    s.add("trace_y", "tr(y_1) = 1", trace_full(A, A.ring.var(0)) == 1)
    ts = is_trace_surjective(A, 1, workers=workers)
    P = sylow_subgroup(G, 3)
    s.add("sylow_point_lift", "a point of the Sylow 3-subgroup, divided by the index 2, is a G-point",
          ts.found and trace_full(A, ts.witness) == 1 and ts.details.get("sylow_order") == 3, ts.to_json())
    direct = find_point(A, 1, workers)
    s.add("direct_point", "the unrestricted search also finds a point", direct.found, direct.to_json())
    back = restrict_point(A, P, direct.witness)
    s.add("restricted_point", "summing a G-point over coset representatives gives a point of the Sylow subgroup",
          trace_full(restrict_action(A, P), back) == 1, {"point": str(back)})
    chr_res = search_chr(A, P, 2, 1)
    s.add("chr_sylow_implies_point", "a Galois witness over the Sylow subgroup comes with a point of the "
          "restricted action", chr_res.found and find_point(restrict_action(A, P), 1, workers).found,
          chr_res.to_json())
    pm = point_morphism(A, direct.witness)
    s.add("point_morphism", "a point defines an equivariant map out of the regular algebra",
          is_equivariant_morphism(pm))
    rep = point_stabilizers(A, 2, workers)
    s.add("stabilizers_free", "all rational points over F_3 and F_9 have stabilizer order prime to 3",
          rep.p_locally_free, _stabilizer_summary(rep))
    cases = [dreg_case(n, p, workers) for n, p in DREG_CASES]
    s.add("d_reg_suite", "for C2, C3, C4, S3, C6 the regular algebra has tr(y) = 1 and a lifted Sylow point",
          all(c["ok"] for c in cases), {"cases": cases})
    return s.report()


# --- c6-split ------------------------------------------------------------------

def s3_a3_setup():
    spec = load_spec("c3-dreg-in-s3")
    return spec.action, spec.section


def c6_c3_setup():
    spec = load_spec("c3-dreg-in-c6")
    return spec.action, spec.section


def fixture_c6_split(workers: int = 1) -> FixtureReport:
    s = _Suite("c6-split")
    A6, R6 = c6_c3_setup()
    rep6 = check_normalized_splitting(A6, R6)
    s.add("normalized_section_splits", "for C3 in C6 with the section through the central involution, the "
          "multiplication and diagonal maps are H-equivariant", rep6.ok, rep6.to_json())
    A3, R3 = s3_a3_setup()
    rep3 = check_normalized_splitting(A3, R3)
    s.add("non_normalized_section_fails", "for A3 in S3 with the section {e, t} the section is not normalized "
          "and the multiplication map is not H-equivariant", not rep3.normalized and not rep3.mu_equivariant,
          rep3.to_json())
    A = load_spec("c6-f3").action
    simples = load_catalog("C6", 3, group=A.group)
    ok, rows = _prop_socle_inclusions(A, simples, 4)
    s.add("socle_between_invariants_and_core_fixed", "in every slice up to degree 4 the invariants lie in the "
          "socle and the socle lies in the fixed points of the largest normal 3-subgroup", ok, {"slices": rows})
    kernels = _kernel_intersection(simples)
    core = p_core(A.group, 3)
    s.add("core_is_kernel_intersection", "the largest normal 3-subgroup is the intersection of the kernels of "
          "the simple modules", kernels == list(core.elements), {"core": list(core.elements)})
    ts = is_trace_surjective(A, 2, workers=workers)
    s.add("graded_no_point", "graded with 3 dividing 6, so no point exists", ts.status == "none_graded_exact")
    return s.report()


def _kernel_intersection(simples) -> list[int]:
    common = set(simples[0].kernel())
    for S in simples[1:]:
        common &= set(S.kernel())
    return sorted(common)


# --- adjunction-s3 -----------------------------------------------------------------

def _roundtrip_inputs(rng: random.Random, count: int = 3):
    A, R = s3_a3_setup()
    H = R.subgroup
    G = R.group
    p = A.p
    a = A.parse("y_1")
    ind = tensor_induce(A, R)
    res_ind = restrict_action(ind, H)
    alphas = []
    for _ in range(count):
        b = random_point(res_ind, ind.iota(0, a), rng, max_degree=1)
        alphas.append(point_morphism(res_ind, b))
    betas = []
    for _ in range(count):
        phi = point_morphism(A, random_point(A, a, rng, max_degree=2))
        betas.append(induce_morphism_tensor(phi, R, source=ind, target=ind))
    B = d_reg(G, p)
    res_b = restrict_action(B, H)
    alphas_p = [morphism_res_dreg_to(A, H, random_point(A, a, rng, max_degree=1), rng, D=B) for _ in range(count)]
    T = product_induce(A, R)
    betas_p = []
    for _ in range(count):
        t = random_tuple_point(T, section_points(T, a), rng)
        betas_p.append(tuple_point_morphism(B, T, t))
    return A, R, ind, res_ind, alphas, betas, B, res_b, T, alphas_p, betas_p


def fixture_adjunction_s3(workers: int = 1, seed: int = SEED) -> FixtureReport:
    s = _Suite("adjunction-s3")
    rng = random.Random(seed)
    A, R, ind, res_ind, alphas, betas, B, res_b, T, alphas_p, betas_p = _roundtrip_inputs(rng)
    s.add("base_is_regular", "the base H-algebra is the dehomogenized regular algebra of A3",
          d_reg(R.subgroup.as_group(), 3) == A)
    s.add("samples_equivariant", "all sampled morphisms are equivariant",
          all(is_equivariant_morphism(m) for m in alphas + betas + alphas_p) and all(b.is_equivariant() for b in betas_p),
          {"count": len(alphas) + len(betas) + len(alphas_p) + len(betas_p)})
    chi_a = [chi(al, ind, R, induced=ind) for al in alphas]
    ok1 = all(is_equivariant_morphism(c) for c in chi_a)
    ok2 = all(iota1_star(c, A, R).var_images == al.var_images for c, al in zip(chi_a, alphas))
    ok3 = all(chi(iota1_star(be, A, R), ind, R, induced=ind).var_images == be.var_images for be in betas)
    s.add("chi_roundtrip", "chi and restriction to the first slot are mutually inverse on sampled morphisms",
          ok1 and ok2 and ok3, {"alpha_images": [_strs(al.var_images) for al in alphas],
                                "beta_images": [_strs(be.var_images) for be in betas]})
    psi_a = [psi(al, B, R, target=T) for al in alphas_p]
    ok4 = all(x.is_equivariant() for x in psi_a)
    ok5 = all(pi1_star(x, R).var_images == al.var_images for x, al in zip(psi_a, alphas_p))
    ok6 = all(psi(pi1_star(be, R), B, R, target=T) == be for be in betas_p)
    s.add("psi_roundtrip", "psi and projection to the first slot are mutually inverse on sampled morphisms",
          ok4 and ok5 and ok6, {"alpha_images": [_strs(al.var_images) for al in alphas_p]})
    tri = triangle_identities(A, B, R)
    tri2 = triangle_identities(A, ind, R)
    s.add("triangle_identities", "unit and counit satisfy the four triangle identities on all generators",
          all(tri.values()) and all(tri2.values()), {"regular": tri, "induced": tri2})
    uc = unit_counit(A, B, R)
    s.add("unit_counit_equivariant", "units and counits of both adjunctions are equivariant", uc.all_equivariant())
    s.add("chi_of_unit", "chi of the unit is the identity of the induced algebra",
          chi(uc.unit_tensor, ind, R, induced=ind).var_images == tuple(ind.ring.gens()))
    s.add("psi_of_identity", "psi of the identity of res B is the unit of the product adjunction",
          psi(AlgebraMorphism.identity(res_b), B, R) == uc.unit_product)
    s.add("f_trace_identity", "the F-trace of psi(id) after chi(id) is the identity, for B regular and for B "
          "tensor-induced", composite_f_trace_is_identity(B, R) and composite_f_trace_is_identity(ind, R))
    return s.report()


# --- wreath-s3 -------------------------------------------------------------------

def _all_pairs_hom(R: CrossSection) -> bool:
    G = R.group
    emb = [frobenius_embedding(R, g) for g in range(G.order)]
    return all(emb[g] * emb[h] == emb[G.mult[g][h]] for g in range(G.order) for h in range(G.order))


def _conjugation_identity(R: CrossSection, R2: CrossSection, shifts) -> bool:
    H = R.group
    hbar = WreathElement.from_base(H, shifts)
    hinv = hbar.inverse()
    return all(frobenius_embedding(R2, g) == hbar * frobenius_embedding(R, g) * hinv for g in range(H.order))


def fixture_wreath_s3(workers: int = 1) -> FixtureReport:
    s = _Suite("wreath-s3")
    _, R = s3_a3_setup()
    G = R.group
    s.add("embedding_homomorphism", "the Frobenius embedding respects products for all 36 pairs in S3",
          _all_pairs_hom(R), {"reps": list(R.reps)})
    sigma, t = G.generators[1], G.generators[0]
    e_sigma = frobenius_embedding(R, sigma)
    e_t = frobenius_embedding(R, t)
    s.add("embedding_values", "the 3-cycle maps to a pure base element and the transposition swaps the slots",
          e_sigma.perm == (0, 1) and e_t.perm == (1, 0) and e_t.base == (0, 0),
          {"sigma": {"base": list(e_sigma.base), "perm": list(e_sigma.perm)},
           "t": {"base": list(e_t.base), "perm": list(e_t.perm)}})
    shifts = (0, sigma)
    R2 = shifted_section(R, shifts)
    s.add("second_section", "a second cross-section also gives a homomorphism and differs from the first by "
          "conjugation with the base element of shifts", R2.reps != R.reps and _all_pairs_hom(R2)
          and _conjugation_identity(R, R2, shifts), {"reps": list(R2.reps)})
    H2 = Subgroup(G, G.closure([t]))
    R3 = cross_section(H2)
    s.add("index_three", "the embedding for the order-2 subgroup of index 3 respects all products",
          _all_pairs_hom(R3), {"subgroup": list(H2.elements), "reps": list(R3.reps)})
    _, R6 = c6_c3_setup()
    s.add("c6_embedding", "the embedding for C3 in C6 respects all products", _all_pairs_hom(R6))
    A, _ = s3_a3_setup()
    ind = tensor_induce(A, R)
    r1 = R.reps[1]
    shifted = all(ind.act(ind.iota(0, v), r1) == ind.iota(1, v) for v in A.ring.gens())
    s.add("slot_shift", "a coset representative moves slot 0 to its own slot", shifted)
    T = product_induce(A, R)
    s.add("induced_actions_lawful", "tensor and product induction define group actions",
          ind.filtration_preserving and T.components == R.index)
    return s.report()


# --- modules-catalog -----------------------------------------------------------------

def fixture_modules_catalog(workers: int = 1) -> FixtureReport:
    s = _Suite("modules-catalog")
    rows = []
    all_ok = True
    for name in CATALOG_GROUPS:
        for p in (2, 3):
            G = catalog_group(name, p)
            simples = load_catalog(name, p, group=G)
            simple_ok = all(is_simple(S) for S in simples)
            reg_proj = is_projective_module(regular_module(G, p))
            triv_proj = is_projective_module(trivial_module(G, p))
            core = list(p_core(G, p).elements)
            kern = _kernel_intersection(simples)
            row = {"group": name, "p": p, "simples": len(simples), "simples_ok": simple_ok,
                   "regular_projective": reg_proj, "trivial_projective": triv_proj,
                   "p_divides_order": G.order % p == 0, "core": core, "kernel_intersection": kern}
            row["ok"] = (simple_ok and reg_proj and triv_proj == (G.order % p != 0) and core == kern)
            all_ok = all_ok and row["ok"]
            rows.append(row)
    s.add("catalog_suite", "catalog modules are simple, regular modules are projective, the trivial module is "
          "projective iff p does not divide |G|, and the kernel intersection of the simples is the p-core",
          all_ok, {"cases": rows})
    C2 = cyclic_group(2)
    reg = regular_module(C2, 2)
    soc = socle(reg, load_catalog("C2", 2, group=C2))
    s.add("regular_c2_socle", "the socle of the regular F_2 C2-module is one-dimensional",
          soc.shape[0] == 1, {"socle": soc.tolist()})
    S3 = catalog_group("S3", 3)
    soc3 = socle(permutation_module(S3, 3), load_catalog("S3", 3, group=S3))
    s.add("s3_permutation_socle", "the socle of the S3 permutation module over F_3 is one-dimensional",
          soc3.shape[0] == 1, {"socle": soc3.tolist()})
    s.add("socle_semisimple", "each socle basis vector generates a submodule inside the socle",
          _contains_rows(soc3, submodule_span(permutation_module(S3, 3), soc3), 3))
    s.add("higman_trivial_c2", "the trivial F_2 C2-module has no Higman witness",
          higman_witness(trivial_module(C2, 2), C2.trivial()) is None)
    C3 = cyclic_group(3)
    w = higman_witness(trivial_module(C3, 2), C3.trivial())
    s.add("higman_coprime", "for C3 over F_2 the trivial module has witness |G|^-1 = 1", w is not None
          and w.tolist() == [[1]], {"witness": None if w is None else w.tolist()})
    uni = make_module(C2, [[[1, 1], [0, 1]]], 2)
    left = tensor_product(reg, uni)
    right = tensor_product(reg, direct_sum(trivial_module(C2, 2), trivial_module(C2, 2)))
    X = find_isomorphism(left, right)
    s.add("projective_tensor_splits", "regular tensor uniserial is isomorphic to regular tensor (trivial plus "
          "trivial)", X is not None, {"intertwiner": None if X is None else X.tolist()})
    s.add("direct_sum_projective", "a direct sum of regular modules is projective",
          is_projective_module(direct_sum(reg, reg)))
    sign = make_module(C2, [[[2]]], 3)
    s.add("hom_dimensions", "Hom(trivial, sign) = 0 over F_3 and Hom(trivial, regular) is one-dimensional over F_2",
          len(hom_space(trivial_module(C2, 3), sign)) == 0 and len(hom_space(trivial_module(C2, 2), reg)) == 1)
    fp = fixed_points(reg)
    s.add("regular_fixed_points", "the fixed points of the regular F_2 C2-module are spanned by (1, 1)",
          fp.tolist() == [[1, 1]])
    return s.report()


FIXTURES: dict[str, Callable[..., FixtureReport]] = {
    "c4-paper": fixture_c4_paper,
    "c4-dehom": fixture_c4_dehom,
    "c2-dreg": fixture_c2_dreg,
    "c3-dreg": fixture_c3_dreg,
    "s3-perm": fixture_s3_perm,
    "s3-dreg": fixture_s3_dreg,
    "c6-split": fixture_c6_split,
    "adjunction-s3": fixture_adjunction_s3,
    "wreath-s3": fixture_wreath_s3,
    "modules-catalog": fixture_modules_catalog,
}


def fixture_names() -> list[str]:
    return list(FIXTURES)


def run_fixture(name: str, workers: int = 1) -> FixtureReport:
    try:
        fn = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(name) from None
    return fn(workers=workers)
