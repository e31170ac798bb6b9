import numpy as np
import pytest

from oracles import rank_mod_p
from tsalg import linalg
from tsalg.catalog import CATALOG_GROUPS, catalog_group, load_catalog
from tsalg.groups import cyclic_group, p_core, symmetric_group_s3
from tsalg.modules import (ModuleError, algebra_socle, direct_sum, find_isomorphism, fixed_points,
                           graded_slice_module, higman_witness, hom_space, is_projective_module, is_simple,
                           make_module, permutation_module, regular_module, slice_socle, socle, submodule_span,
                           tensor_product, trivial_module, verify_higman)

C2 = cyclic_group(2)
S3 = symmetric_group_s3()


def test_module_law_checked():
    with pytest.raises(ModuleError):
        make_module(cyclic_group(3), [[[1, 1], [0, 1]]], 2)  # order 2 matrix for an order 3 generator


def test_fixed_points_examples():
    assert fixed_points(regular_module(C2, 2)).tolist() == [[1, 1]]
    M = permutation_module(S3, 3)
    assert fixed_points(M, S3.trivial()).shape[0] == 3
    assert fixed_points(M).tolist() == [[1, 1, 1]]


def test_hom_examples():
    assert len(hom_space(trivial_module(C2, 2), regular_module(C2, 2))) == 1
    M = make_module(C2, [[[1]]], 3)
    assert len(hom_space(M, M)) == 1
    sign = make_module(S3, [[[2]], [[1]]], 3)
    assert len(hom_space(trivial_module(S3, 3), sign)) == 0


def test_hom_space_is_intertwining():
    M, N = permutation_module(S3, 3), regular_module(S3, 3)
    for X in hom_space(M, N):
        for g in range(6):
            assert np.array_equal(linalg.matmul(M.rho[g], X, 3), linalg.matmul(X, N.rho[g], 3))


def test_socle_examples():
    reg = regular_module(C2, 2)
    assert socle(reg, [trivial_module(C2, 2)]).shape[0] == 1
    S = make_module(cyclic_group(3), [[[0, 1], [1, 1]]], 2)
    assert socle(S, [S]).shape[0] == 2
    T1 = trivial_module(C2, 3)
    assert socle(direct_sum(T1, T1), [T1]).shape[0] == 2


def test_s3_permutation_socle():
    simples = load_catalog("S3", 3, group=S3)
    soc = socle(permutation_module(S3, 3), simples)
    assert soc.tolist() == [[1, 1, 1]]


def test_socle_rejects_non_simple():
    with pytest.raises(ModuleError):
        socle(regular_module(C2, 2), [regular_module(C2, 2)])


def test_socle_spin_check():
    for name, p in (("S3", 3), ("C4", 2), ("S3", 2)):
        G = catalog_group(name, p)
        M = regular_module(G, p)
        soc = socle(M, load_catalog(name, p, group=G))
        span = submodule_span(M, soc)
        assert rank_mod_p(np.vstack([soc, span]).tolist(), p) == soc.shape[0]


def test_simple_checks():
    assert is_simple(trivial_module(C2, 2))
    assert not is_simple(regular_module(C2, 2))
    assert is_simple(make_module(cyclic_group(3), [[[0, 1], [1, 1]]], 2))


def test_higman_examples():
    assert higman_witness(regular_module(C2, 2), C2.trivial()) is not None
    assert higman_witness(trivial_module(C2, 2), C2.trivial()) is None
    C3 = cyclic_group(3)
    w = higman_witness(trivial_module(C3, 2), C3.trivial())
    assert w.tolist() == [[1]]
    assert verify_higman(trivial_module(C3, 2), C3.trivial(), w)


def test_relative_projectivity():
    # every module is projective relative to the whole group
    M = trivial_module(C2, 2)
    assert higman_witness(M, C2.whole()) is not None


@pytest.mark.parametrize("name", CATALOG_GROUPS)
@pytest.mark.parametrize("p", [2, 3])
def test_catalog(name, p):
    G = catalog_group(name, p)
    simples = load_catalog(name, p, group=G)
    assert all(is_simple(S) for S in simples)
    assert is_projective_module(regular_module(G, p))
    assert is_projective_module(trivial_module(G, p)) == (G.order % p != 0)
    common = set(range(G.order))
    for S in simples:
        common &= set(S.kernel())
    assert sorted(common) == list(p_core(G, p).elements)


def test_catalog_dimensions_sum_of_squares_when_semisimple():
    # p not dividing |G|: sum of dim^2 over absolutely simple modules is |G| for split fields
    G = catalog_group("C2", 3)
    assert sum(S.dim ** 2 for S in load_catalog("C2", 3, group=G)) == 2


def test_tensor_with_projective_splits():
    reg = regular_module(C2, 2)
    uni = make_module(C2, [[[1, 1], [0, 1]]], 2)
    T1 = trivial_module(C2, 2)
    X = find_isomorphism(tensor_product(reg, uni), tensor_product(reg, direct_sum(T1, T1)))
    assert X is not None and linalg.inverse(X, 2) is not None


def test_graded_slices(c4, s3_perm):
    M, basis = graded_slice_module(c4, 1)
    assert M.dim == 3
    M0, _ = graded_slice_module(c4, 0)
    assert M0.dim == 1 and fixed_points(M0).shape[0] == 1
    P, _ = graded_slice_module(s3_perm, 1)
    assert all(np.array_equal(P.rho[g], permutation_module(S3, 3).rho[g]) for g in range(6))


def test_algebra_socle_examples(s3_perm, c4):
    assert [str(f) for f in algebra_socle(s3_perm, 1, load_catalog("S3", 3, group=s3_perm.group))] == ["a + b + c"]
    C4 = c4.group
    assert [str(f) for f in slice_socle(c4, 1, load_catalog("C4", 2, group=C4))] == ["x1"]


def test_algebra_socle_coprime_is_everything():
    G = cyclic_group(2)
    from tsalg.actions import make_action
    A = make_action(3, ["u", "v"], G, [["v", "u"]])
    soc = slice_socle(A, 2, load_catalog("C2", 3, group=G))
    assert len(soc) == 3
