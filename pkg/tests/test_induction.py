import random

import pytest

from tsalg.actions import AlgebraMorphism, d_reg, is_equivariant_morphism, restrict_action
from tsalg.groups import CrossSection, Subgroup, cross_section, cyclic_group, symmetric_group_s3
from tsalg.induction import (WreathElement, chi, check_normalized_splitting, composite_f_trace_is_identity,
                             f_trace, frobenius_embedding, induce_morphism_tensor, induced_product_point,
                             induced_tensor_point, iota1_star, pi1_star, product_induce, psi, shifted_section,
                             tensor_induce, triangle_identities, unit_counit)
from tsalg.sampling import (morphism_res_dreg_to, random_point, random_tuple_point, section_points,
                            tuple_point_morphism)
from tsalg.trace import trace_full

S3 = symmetric_group_s3()
T, SIGMA = S3.generators


def test_embedding_examples(s3_a3):
    _, R = s3_a3
    e = frobenius_embedding(R, SIGMA)
    conj = S3.mult[S3.mult[T][SIGMA]][S3.inverse[T]]
    assert e.base == (SIGMA, conj) and e.perm == (0, 1)
    e = frobenius_embedding(R, T)
    assert e.base == (0, 0) and e.perm == (1, 0)
    e = frobenius_embedding(R, 0)
    assert e.base == (0, 0) and e.perm == (0, 1)


@pytest.mark.parametrize("sub_gen", [SIGMA, T, 0])
def test_embedding_homomorphism_s3(sub_gen):
    R = cross_section(Subgroup(S3, S3.closure([sub_gen])))
    emb = [frobenius_embedding(R, g) for g in range(6)]
    for g in range(6):
        for h in range(6):
            assert emb[g] * emb[h] == emb[S3.mult[g][h]]


def test_section_change_conjugation(s3_a3):
    _, R = s3_a3
    for shifts in [(0, SIGMA), (0, S3.mult[SIGMA][SIGMA]), (SIGMA, 0)]:
        if shifts[0] != 0:
            continue  # reps[0] stays the identity
        R2 = shifted_section(R, shifts)
        hbar = WreathElement.from_base(S3, shifts)
        for g in range(6):
            assert frobenius_embedding(R2, g) == hbar * frobenius_embedding(R, g) * hbar.inverse()


def test_tensor_induce_whole_group(c3_dreg):
    G = c3_dreg.group
    ind = tensor_induce(c3_dreg, cross_section(G.whole()))
    assert ind.nvars == c3_dreg.nvars
    for g in range(G.order):
        for i in range(ind.nvars):
            assert str(ind.act(ind.ring.var(i), g)).replace("r0_", "") == str(c3_dreg.act(c3_dreg.ring.var(i), g))


def test_tensor_induce_s3(s3_a3):
    A, R = s3_a3
    ind = tensor_induce(A, R)
    assert ind.nvars == 4 and ind.group.order == 6
    H = R.subgroup
    for h in H.elements:
        for i, v in enumerate(A.ring.gens()):
            loc = H.elements.index(h)
            assert ind.act(ind.iota(0, v), h) == ind.iota(0, A.act(v, loc))
    for j, r in enumerate(R.reps):
        for v in A.ring.gens():
            assert ind.act(ind.iota(0, v), r) == ind.iota(j, v)


def test_product_induce(s3_a3, c3_dreg):
    A, R = s3_a3
    Tup = product_induce(A, R)
    assert Tup.components == 2
    G = R.group
    for t in Tup.algebra_generators():
        for g in range(6):
            for h in range(6):
                assert Tup.act(Tup.act(t, g), h) == Tup.act(t, G.mult[g][h])
    one = product_induce(c3_dreg, cross_section(c3_dreg.group.whole()))
    assert one.components == 1


def test_chi_of_unit_is_identity(s3_a3):
    A, R = s3_a3
    ind = tensor_induce(A, R)
    uc = unit_counit(A, ind, R)
    assert chi(uc.unit_tensor, ind, R, induced=ind).var_images == tuple(ind.ring.gens())


def test_chi_whole_group(c3_dreg):
    R = cross_section(c3_dreg.group.whole())
    alpha = AlgebraMorphism.identity(c3_dreg)
    out = chi(alpha, c3_dreg, R)
    assert [str(f) for f in out.var_images] == [str(v) for v in c3_dreg.ring.gens()]


def test_psi_of_identity_is_unit(s3_a3):
    A, R = s3_a3
    B = d_reg(S3, 3)
    res_b = restrict_action(B, R.subgroup)
    u = psi(AlgebraMorphism.identity(res_b), B, R)
    for i, v in enumerate(B.ring.gens()):
        assert u.var_images[i] == tuple(B.act(v, S3.inverse[r]) for r in R.reps)
    assert u.is_equivariant()


def test_roundtrips_on_samples(s3_a3):
    A, R = s3_a3
    rng = random.Random(7)
    a = A.parse("y_1")
    ind = tensor_induce(A, R)
    res_ind = restrict_action(ind, R.subgroup)
    from tsalg.actions import point_morphism
    for _ in range(4):
        alpha = point_morphism(res_ind, random_point(res_ind, ind.iota(0, a), rng, max_degree=1))
        assert iota1_star(chi(alpha, ind, R, induced=ind), A, R).var_images == alpha.var_images
        beta = induce_morphism_tensor(point_morphism(A, random_point(A, a, rng)), R, source=ind, target=ind)
        assert chi(iota1_star(beta, A, R), ind, R, induced=ind).var_images == beta.var_images
    B = d_reg(S3, 3)
    Tup = product_induce(A, R)
    for _ in range(4):
        alpha = morphism_res_dreg_to(A, R.subgroup, random_point(A, a, rng, max_degree=1), rng, D=B)
        assert is_equivariant_morphism(alpha)
        assert pi1_star(psi(alpha, B, R, target=Tup), R).var_images == alpha.var_images
        beta = tuple_point_morphism(B, Tup, random_tuple_point(Tup, section_points(Tup, a), rng))
        assert psi(pi1_star(beta, R), B, R, target=Tup) == beta


def test_non_equivariant_rejected(s3_a3):
    A, R = s3_a3
    ind = tensor_induce(A, R)
    res_ind = restrict_action(ind, R.subgroup)
    bad = AlgebraMorphism(A, res_ind, (res_ind.ring.zero(), res_ind.ring.zero()))
    with pytest.raises(ValueError):
        chi(bad, ind, R)


def test_triangle_identities(s3_a3, c6_c3):
    for A, R in (s3_a3, c6_c3):
        G = R.group
        B = d_reg(G, 3)
        assert all(triangle_identities(A, B, R).values())


def test_triangle_identities_whole_group(c3_dreg):
    R = cross_section(c3_dreg.group.whole())
    assert all(triangle_identities(c3_dreg, c3_dreg, R).values())


def test_unit_counit_equivariant(s3_a3):
    A, R = s3_a3
    assert unit_counit(A, d_reg(S3, 3), R).all_equivariant()


def test_f_trace_identity(s3_a3):
    A, R = s3_a3
    assert composite_f_trace_is_identity(d_reg(S3, 3), R)
    assert composite_f_trace_is_identity(tensor_induce(A, R), R)


def test_f_trace_whole_group(c3_dreg):
    R = cross_section(c3_dreg.group.whole())
    assert composite_f_trace_is_identity(c3_dreg, R)
    u = psi(AlgebraMorphism.identity(c3_dreg), c3_dreg, R)
    assert f_trace(u, c3_dreg, R).var_images == tuple(c3_dreg.ring.gens())


def test_normalized_splitting(s3_a3, c6_c3):
    A6, R6 = c6_c3
    assert check_normalized_splitting(A6, R6).ok
    A3, R3 = s3_a3
    rep = check_normalized_splitting(A3, R3)
    assert not rep.normalized and not rep.mu_equivariant and not rep.ok


def test_splitting_whole_group(c3_dreg):
    assert check_normalized_splitting(c3_dreg, cross_section(c3_dreg.group.whole())).ok


def test_c6_section_is_central(c6_c3):
    _, R = c6_c3
    G = R.group
    assert all(G.mult[R.reps[1]][g] == G.mult[g][R.reps[1]] for g in range(G.order))
    assert isinstance(R, CrossSection)


def test_induced_tensor_point(s3_a3):
    A, R = s3_a3
    _, cand, tr = induced_tensor_point(A, R, A.parse("y_1"))
    assert tr == 1


def test_induced_product_trace_formula(s3_a3, c6_c3):
    for A, R in (s3_a3, c6_c3):
        Tup = product_induce(A, R)
        a = A.parse("y_1")
        hat = Tup.tuple([a] + [A.ring.one()] * (R.index - 1))
        expected = (1 + (R.index - 1) * R.subgroup.order) % A.p
        assert Tup.trace(hat) == Tup.const(expected)
        assert Tup.is_one(Tup.trace(section_points(Tup, a)))


@pytest.mark.xfail(strict=True, reason="m^-1 (a, 1, ..., 1) has trace tr_H(a) + (m-1)|H| = 1 + 3 = 1, "
                                       "so 2 (a, 1) has trace 2, not 1; see the decisions ledger")
def test_induced_product_point_literal(s3_a3):
    A, R = s3_a3
    Tup, _, tr = induced_product_point(A, R, A.parse("y_1"))
    assert Tup.is_one(tr)


def test_induced_point_is_point_of_restriction(s3_a3):
    A, R = s3_a3
    ind, cand, _ = induced_tensor_point(A, R, A.parse("y_1"))
    res = restrict_action(ind, R.subgroup)
    assert trace_full(res, ind.iota(0, A.parse("y_1"))) == 1
