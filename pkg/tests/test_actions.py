import numpy as np
import pytest

from tsalg.actions import (ActionLawError, AlgebraMorphism, act, d_reg, dehomogenize, is_equivariant_morphism,
                           is_unitriangular, linear_action, make_action, morphism_linear_part, point_morphism,
                           restrict_action, trivial_action)
from tsalg.groups import Subgroup, build_group, cyclic_group, symmetric_group_s3
from tsalg.poly import PolyRing


def test_c4_action(c4):
    g = c4.group.generators[0]
    assert c4.graded
    assert act(c4, c4.parse("x3"), g) == c4.parse("x3 + x2")
    assert act(c4, c4.parse("x3"), c4.group.power(g, 2)) == c4.parse("x3 + x1")
    f = c4.parse("x1*x2 + x3^2")
    assert act(c4, f, 0) == f


def test_action_law_exhaustive(c4, c2_dreg, c3_dreg, s3_perm):
    for A in (c4, c2_dreg, c3_dreg, s3_perm):
        G = A.group
        for g in range(G.order):
            for h in range(G.order):
                for v in A.ring.gens():
                    assert A.act(A.act(v, g), h) == A.act(v, G.mult[g][h])


def test_trivial_action_graded():
    A = trivial_action(3, ["a", "b"], symmetric_group_s3())
    assert A.graded
    assert all(A.act(v, g) == v for v in A.ring.gens() for g in range(6))


def test_c2_translation_not_graded(c2_dreg):
    assert not c2_dreg.graded and c2_dreg.filtration_preserving


def test_law_violation_reports_triple():
    G = cyclic_group(2)
    with pytest.raises(ActionLawError) as info:
        make_action(3, ["x"], G, [["x + 1"]])
    assert info.value.var == "x" and info.value.g is not None


def test_linear_action_s3_permutations(s3_perm):
    G = s3_perm.group
    mats = [[[1 if s3_perm.images[g][i] == s3_perm.ring.var(j) else 0 for j in range(3)] for i in range(3)]
            for g in G.generators]
    assert linear_action(3, G, mats, vars=["a", "b", "c"]) == s3_perm


def test_linear_action_identity_is_trivial():
    G = cyclic_group(3)
    A = linear_action(2, G, [[[1, 0], [0, 1]]])
    assert A == trivial_action(2, ["x1", "x2"], G)


def test_linear_action_reproduces_c4(c4):
    M = [[1, 0, 0], [1, 1, 0], [0, 1, 1]]
    assert linear_action(2, c4.group, [M]) == c4


def test_d_reg_c2():
    A = d_reg(cyclic_group(2), 2)
    assert A.vars == ("y_1",)
    assert A.act(A.parse("y_1"), 1) == A.parse("y_1 + 1")


def test_d_reg_c3():
    G = cyclic_group(3)
    A = d_reg(G, 3)
    s = G.generators[0]
    assert A.act(A.parse("y_1"), s) == A.parse("y_2")
    assert A.act(A.parse("y_2"), s) == A.parse("1 + 2*y_1 + 2*y_2")
    for v in A.ring.gens():
        assert A.act(A.act(A.act(v, s), s), s) == v


def test_d_reg_trivial_group():
    A = d_reg(build_group([], degree=1), 5)
    assert A.nvars == 0


def test_dehomogenize_c4(c4, c4_dehom):
    D = dehomogenize(c4, c4.parse("x1"))
    g = D.group.generators[0]
    assert D.vars == ("x2", "x3")
    assert D.act(D.parse("x2"), g) == D.parse("x2 + 1")
    assert D.act(D.parse("x3"), g) == D.parse("x3 + x2")
    assert D == c4_dehom


def test_dehomogenize_regular_sum_gives_d_reg():
    G = cyclic_group(3)
    n = G.order
    # Sym of the regular representation with variables X_0..X_2, (X_a)g = X_{ag}
    images = [[f"X{G.mult[a][g]}" for a in range(n)] for g in G.generators]
    A = make_action(3, [f"X{a}" for a in range(n)], G, images)
    D = dehomogenize(A, A.parse("X0 + X1 + X2"))
    assert D.nvars == 2
    assert D.filtration_preserving


def test_dehomogenize_trivial():
    A = trivial_action(2, ["x1"], build_group([], degree=1))
    D = dehomogenize(A, A.parse("x1"))
    assert D.nvars == 0


def test_equivariant_morphism_examples(c2_dreg):
    A = c2_dreg
    assert is_equivariant_morphism(AlgebraMorphism.identity(A))
    assert is_equivariant_morphism(AlgebraMorphism(A, A, (A.parse("y_1 + 1"),)))
    assert is_equivariant_morphism(AlgebraMorphism(A, A, (A.parse("y_1^2"),)))
    assert not is_equivariant_morphism(AlgebraMorphism(A, A, (A.ring.zero(),)))


def test_linear_part_examples(s3_perm, c4):
    A = s3_perm
    assert np.array_equal(morphism_linear_part(AlgebraMorphism.identity(A)), np.eye(3, dtype=int))
    m = AlgebraMorphism(A, A, (A.parse("a + (a + b + c)^2"), A.parse("b"), A.parse("c")))
    assert np.array_equal(morphism_linear_part(m), np.eye(3, dtype=int))
    g = c4.group.generators[0]
    m = AlgebraMorphism(c4, c4, tuple(c4.images[g]))
    assert morphism_linear_part(m).tolist() == [[1, 0, 0], [1, 1, 0], [0, 1, 1]]


def test_linear_part_intertwines_for_equivariant_graded(s3_perm):
    A = s3_perm
    s = A.parse("a + b + c")
    for k in range(3):
        m = AlgebraMorphism(A, A, tuple(v + s.scale(k) for v in A.ring.gens()))
        assert is_equivariant_morphism(m)
        L = morphism_linear_part(m)
        for g in A.group.generators:
            assert np.array_equal(A.linear_matrix(g) @ L % 3, L @ A.linear_matrix(g) % 3)


def test_unitriangular(c4, s3_perm):
    assert is_unitriangular(c4)
    assert not is_unitriangular(s3_perm)


def test_point_morphism(c2_dreg):
    m = point_morphism(c2_dreg, c2_dreg.parse("y_1"))
    assert is_equivariant_morphism(m)
    with pytest.raises(ValueError):
        point_morphism(c2_dreg, c2_dreg.parse("y_1^2 + y_1"))


def test_restrict(c4):
    G = c4.group
    g = G.generators[0]
    H = Subgroup(G, G.closure([G.power(g, 2)]))
    res = restrict_action(c4, H)
    assert res.group.order == 2
    assert res.act(res.parse("x3"), res.group.generators[0]) == res.parse("x3 + x1")
    triv = restrict_action(c4, G.trivial())
    assert triv.group.order == 1


def test_composition():
    R = PolyRing(2, ["x"])
    G = cyclic_group(2)
    A = make_action(2, ["x"], G, [["x + 1"]])
    f = AlgebraMorphism(A, A, (A.parse("x + 1"),))
    assert f.compose(f).var_images == (A.parse("x"),)
    assert R.parse("x") == A.parse("x")
