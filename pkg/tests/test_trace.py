import pytest

from oracles import c4_invariant_count_brute, c4_invariant_dim
from tsalg.actions import d_reg, restrict_action, trivial_action
from tsalg.groups import Subgroup, build_group, cross_section, cyclic_group, sylow_subgroup, symmetric_group_s3
from tsalg.registry import C4_F2, C4_F3, C4_F4
from tsalg.trace import (find_point, invariant_basis, is_trace_surjective, rel_trace, restrict_point,
                         subalgebra_contains, trace_full, trace_kernel_basis, verify_invariant)


def test_trace_examples(c4, c2_dreg):
    assert trace_full(c4, c4.parse("x1*x2*x3")) == c4.parse("x1^3")
    assert trace_full(c4, c4.ring.one()).is_zero()
    assert trace_full(c2_dreg, c2_dreg.parse("y_1")) == 1


def test_verify_invariant(c4):
    for text in (C4_F2, C4_F3, C4_F4, "x1"):
        assert verify_invariant(c4, c4.parse(text))
    assert not verify_invariant(c4, c4.parse("x2"))


def test_relation(c4):
    x1, f2, f3, f4 = (c4.parse(t) for t in ("x1", C4_F2, C4_F3, C4_F4))
    assert (x1 * x1 * f4 - f2 ** 3 - x1 * f2 * f3 - f3 * f3).is_zero()
    assert subalgebra_contains([x1, f2, f3, f4], f4 * x1 * x1, 6)


def test_rel_trace_examples(c4):
    G = c4.group
    g = G.generators[0]
    H = Subgroup(G, G.closure([G.power(g, 2)]))
    assert rel_trace(c4, H, G.whole(), c4.parse("x2")) == c4.parse("x1")
    f = c4.parse("x1*x2")
    assert rel_trace(c4, G.whole(), G.whole(), c4.parse("x1")) == c4.parse("x1")
    assert rel_trace(c4, G.trivial(), G.whole(), f) == trace_full(c4, f)
    with pytest.raises(ValueError):
        rel_trace(c4, G.whole(), G.whole(), c4.parse("x2"))


def test_rel_trace_section_independent(c4):
    G = c4.group
    g = G.generators[0]
    H = Subgroup(G, G.closure([G.power(g, 2)]))
    f = c4.parse("x2^3 + x2*x1")
    R = cross_section(H)
    other = [G.mult[H.elements[-1]][r] for r in R.reps]
    assert rel_trace(c4, H, G.whole(), f) == rel_trace(c4, H, G.whole(), f, reps=other)


def test_transitivity_all_subgroups(s3_perm):
    A = s3_perm
    G = A.group
    f = A.parse("a^2*b + c")
    seen = set()
    for x in range(G.order):
        H = Subgroup(G, G.closure([x]))
        if H.elements in seen:
            continue
        seen.add(H.elements)
        inner = rel_trace(A, G.trivial(), H, f)
        assert rel_trace(A, H, G.whole(), inner) == trace_full(A, f)


def test_find_point_examples(c2_dreg, c4, c4_dehom):
    r = find_point(c2_dreg, 1)
    assert r.found and r.witness == c2_dreg.parse("y_1")
    assert find_point(c4, 4).status == "none_graded_exact"
    r = find_point(c4_dehom, 2)
    assert r.found and r.witness == c4_dehom.parse("x2*x3")


def test_find_point_inconclusive(c4_dehom):
    assert find_point(c4_dehom, 1).status == "inconclusive_at_bound"


def test_coprime_order_point():
    A = trivial_action(2, ["x"], cyclic_group(3))
    r = is_trace_surjective(A, 0)
    assert r.found and r.witness == 1 and trace_full(A, r.witness) == 1


def test_sylow_lift_s3():
    A = d_reg(symmetric_group_s3(), 3)
    r = is_trace_surjective(A, 1)
    assert r.found and r.details["sylow_order"] == 3
    assert trace_full(A, r.witness) == 1
    P = sylow_subgroup(A.group, 3)
    res = restrict_action(A, P)
    w = res.parse(r.details["restricted_witness"])
    assert r.witness == w.scale(2)


def test_graded_s3_not_surjective(s3_perm):
    assert is_trace_surjective(s3_perm, 2).status == "none_graded_exact"


def test_restrict_point():
    A = d_reg(symmetric_group_s3(), 3)
    a = find_point(A, 1).witness
    for H in (sylow_subgroup(A.group, 3), sylow_subgroup(A.group, 2)):
        res = restrict_action(A, H)
        assert trace_full(res, restrict_point(A, H, a)) == 1


def test_invariant_basis_c4(c4):
    assert [str(f) for f in invariant_basis(c4, 1)] == ["x1"]
    basis = invariant_basis(c4, 2)
    assert len(basis) == 2
    assert [str(f) for f in basis] == ["x1^2", "x1*x2 + x2^2"]


@pytest.mark.parametrize("d", range(1, 7))
def test_invariant_dims_match_bitmask_oracle(c4, d):
    assert len(invariant_basis(c4, d)) == c4_invariant_dim(d)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_invariant_dims_match_enumeration(c4, d):
    assert 2 ** len(invariant_basis(c4, d)) == c4_invariant_count_brute(d)


def test_invariant_basis_trivial_group():
    A = trivial_action(2, ["a", "b"], build_group([], degree=1))
    assert len(invariant_basis(A, 3)) == 4


def test_trace_kernel(c4_dehom):
    for f in trace_kernel_basis(c4_dehom, 2):
        assert trace_full(c4_dehom, f).is_zero()


def test_generation_by_points(c4_dehom):
    lam = c4_dehom.parse("x2*x3")
    gens = [lam] + trace_kernel_basis(c4_dehom, 2)
    assert subalgebra_contains(gens, c4_dehom.parse("x2"), 4)
    assert subalgebra_contains(gens, c4_dehom.parse("x3"), 4)


def test_subalgebra_variables_generate(c4):
    assert subalgebra_contains(c4.ring.gens(), c4.parse("x2^2*x3 + 1"), 3)
    assert not subalgebra_contains([c4.parse("x1")], c4.parse("x2"), 3)
    with pytest.raises(ValueError):
        subalgebra_contains([c4.parse("x1")], c4.parse("x2^3"), 2)


def test_invariants_are_traces_times_point(c4_dehom):
    lam = c4_dehom.parse("x2*x3")
    for u in invariant_basis(c4_dehom, 3):
        assert trace_full(c4_dehom, u * lam) == u
