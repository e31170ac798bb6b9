"""Dense linear algebra over F_p with deterministic pivoting.

Matrices are numpy arrays of dtype int64 (object for primes beyond the
compiled kernel's range). Pivots are always the first nonzero entry in
column order, so every result is reproducible bit for bit.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from . import kernels


def dtype_for(p: int):
    return np.int64 if p < kernels.COMPILED_PRIME_LIMIT else object


def as_matrix(rows, p: int, ncols: int | None = None) -> np.ndarray:
    dt = dtype_for(p)
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        M = rows.astype(dt, copy=True)
    else:
        rows = [list(r) for r in rows]
        if not rows:
            return np.zeros((0, ncols or 0), dtype=dt)
        M = np.array(rows, dtype=dt)
        if M.ndim == 1:
            M = M.reshape(len(rows), -1)
    return M % p


def rref(M, p: int, ncols: int = -1) -> tuple[np.ndarray, list[int]]:
    R = as_matrix(M, p)
    if R.size == 0:
        return R, []
    pivots = kernels.rref_inplace(R, p, ncols)
    return R, pivots


def rank(M, p: int) -> int:
    return len(rref(M, p)[1])


def row_space(M, p: int) -> np.ndarray:
    """Reduced echelon basis of the row space."""
    R, piv = rref(M, p)
    return R[: len(piv)]


def nullspace(M, p: int) -> np.ndarray:
    """Reduced echelon basis (as rows) of ``{x : M @ x = 0}``."""
    M = as_matrix(M, p)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=dtype_for(p))
    R, piv = rref(M, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=dtype_for(p))
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-R[i, f]) % p
    if len(free) == 0:
        return basis
    return row_space(basis, p)


def left_nullspace(M, p: int) -> np.ndarray:
    """Rows x with ``x @ M = 0``."""
    return nullspace(as_matrix(M, p).T, p)


def solve(A, b, p: int):
    """One solution of ``A x = b`` (free variables set to 0), or None."""
    A = as_matrix(A, p)
    m, n = A.shape
    bb = np.asarray(b, dtype=dtype_for(p)).reshape(m, 1) % p
    aug = np.hstack([A, bb]) if m else np.zeros((0, n + 1), dtype=dtype_for(p))
    if m == 0:
        return np.zeros(n, dtype=dtype_for(p))
    R, piv = rref(aug, p, ncols=n)
    # inconsistent iff a zero row of A has a nonzero right-hand side
    if np.any(R[len(piv):, n] % p):
        return None
    x = np.zeros(n, dtype=dtype_for(p))
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


def matmul(A, B, p: int) -> np.ndarray:
    A = as_matrix(A, p)
    B = as_matrix(B, p)
    if A.dtype == object or p > 2**20:
        return np.array(
            [[sum(int(a) * int(b) for a, b in zip(row, col)) % p for col in B.T] for row in A],
            dtype=dtype_for(p),
        ).reshape(A.shape[0], B.shape[1])
    # residues below 2**20 keep the dot products well inside int64
    return (A @ B) % p


def inverse(M, p: int):
    M = as_matrix(M, p)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("matrix is not square")
    aug = np.hstack([M, np.eye(n, dtype=M.dtype)])
    R, piv = rref(aug, p, ncols=n)
    if len(piv) < n:
        return None
    return R[:, n:].copy()


def identity(n: int, p: int) -> np.ndarray:
    return np.eye(n, dtype=dtype_for(p))


def in_row_space(basis, v, p: int) -> bool:
    basis = as_matrix(basis, p)
    if basis.shape[0] == 0:
        return not np.any(np.asarray(v) % p)
    return rank(np.vstack([basis, as_matrix([v], p)]), p) == rank(basis, p)


class SparseEchelon:
    """Incremental row reduction of sparse vectors keyed by hashable coordinates.

    Used where the coordinate set is not known in advance (spans of
    products of polynomials). Pivot choice is the maximal key under
    ``order_key``, which keeps the result independent of insertion order
    for the span itself.
    """

    def __init__(self, p: int, order_key=None):
        self.p = p
        self.key = order_key or (lambda k: k)
        self.rows: dict[Hashable, dict] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping[Hashable, int]) -> dict:
        p = self.p
        v = {k: c % p for k, c in vec.items() if c % p}
        while v:
            lead = max(v, key=self.key)
            row = self.rows.get(lead)
            if row is None:
                return v
            f = v[lead]
            for k, c in row.items():
                s = (v.get(k, 0) - f * c) % p
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping[Hashable, int]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = max(v, key=self.key)
        inv = pow(v[lead], -1, self.p)
        self.rows[lead] = {k: c * inv % self.p for k, c in v.items()}
        return True

    def contains(self, vec: Mapping[Hashable, int]) -> bool:
        return not self.reduce(vec)


def vectors_to_rows(vectors: Iterable[Sequence[int]], p: int) -> np.ndarray:
    return as_matrix(list(vectors), p)
