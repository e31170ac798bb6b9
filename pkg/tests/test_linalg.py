import numpy as np
import pytest

from oracles import rank_mod_p
from tsalg import linalg


@pytest.mark.parametrize("p", [2, 3, 7, 101])
def test_rank_matches_oracle(p):
    rng = np.random.default_rng(p)
    for _ in range(20):
        M = rng.integers(0, p, size=(rng.integers(1, 8), rng.integers(1, 8)))
        assert linalg.rank(M, p) == rank_mod_p(M.tolist(), p)


def test_nullspace_is_kernel():
    p = 5
    rng = np.random.default_rng(0)
    M = rng.integers(0, p, size=(4, 7))
    N = linalg.nullspace(M, p)
    assert N.shape[0] == 7 - linalg.rank(M, p)
    assert not np.any(linalg.matmul(M, N.T, p))


def test_solve_and_inconsistent():
    p = 3
    A = np.array([[1, 1], [1, 2]])
    x = linalg.solve(A, np.array([2, 0]), p)
    assert np.array_equal(linalg.matmul(A, x.reshape(2, 1), p).ravel(), [2, 0])
    assert linalg.solve(np.array([[1, 1], [2, 2]]), np.array([1, 0]), p) is None


def test_inverse():
    p = 7
    M = np.array([[1, 2], [3, 4]])
    inv = linalg.inverse(M, p)
    assert np.array_equal(linalg.matmul(M, inv, p), linalg.identity(2, p))
    assert linalg.inverse(np.array([[1, 2], [2, 4]]), p) is None


def test_left_nullspace():
    p = 2
    M = np.array([[1, 0], [1, 0], [0, 1]])
    L = linalg.left_nullspace(M, p)
    assert L.tolist() == [[1, 1, 0]]


def test_sparse_echelon():
    E = linalg.SparseEchelon(3)
    assert E.add({"a": 1, "b": 2})
    assert E.add({"b": 1})
    assert E.contains({"a": 2})
    assert not E.add({"a": 1, "b": 1})
    assert not E.contains({"c": 1})


def test_large_prime_uses_object_dtype():
    p = (1 << 61) - 1
    M = linalg.as_matrix([[p - 1, 2], [1, p - 2]], p)
    assert M.dtype == object
    assert linalg.rank(M, p) == 1
