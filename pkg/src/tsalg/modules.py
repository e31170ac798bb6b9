"""Finite-dimensional right kG-modules given by matrices.

Vectors are rows and act on the right: ``v . g = v @ rho[g]``, so
``rho[g] @ rho[h] == rho[g*h]``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from . import linalg
from .actions import AlgebraAction
from .groups import GroupTable, Subgroup, cross_section
from .poly import Polynomial, from_vector

ENUMERATION_CAP = 2**20


class ModuleError(ValueError):
    pass


class KGModule:
    def __init__(self, group: GroupTable, p: int, rho: Sequence[np.ndarray], validate: bool = True):
        self.group = group
        self.p = p
        self.rho = tuple(linalg.as_matrix(M, p) for M in rho)
        if len(self.rho) != group.order:
            raise ModuleError("need one matrix per group element")
        self.dim = self.rho[0].shape[0]
        if validate:
            self._check_law()

    def _check_law(self) -> None:
        n, p = self.dim, self.p
        for g, M in enumerate(self.rho):
            if M.shape != (n, n):
                raise ModuleError(f"matrix for element {g} has shape {M.shape}")
        if not np.array_equal(self.rho[0], linalg.identity(n, p)):
            raise ModuleError("identity does not act as the identity matrix")
        G = self.group
        for g in range(G.order):
            for h in range(G.order):
                if not np.array_equal(linalg.matmul(self.rho[g], self.rho[h], p), self.rho[G.mult[g][h]]):
                    raise ModuleError(f"homomorphism law fails at g={g}, h={h}")

    def __repr__(self):
        return f"KGModule(dim={self.dim}, p={self.p}, |G|={self.group.order})"

    def generator_matrices(self) -> list[list[list[int]]]:
        return [self.rho[s].tolist() for s in self.group.generators]

    def kernel(self) -> list[int]:
        eye = linalg.identity(self.dim, self.p)
        return [g for g in range(self.group.order) if np.array_equal(self.rho[g], eye)]

    def restrict(self, H: Subgroup) -> "KGModule":
        return KGModule(H.as_group(), self.p, [self.rho[g] for g in H.elements], validate=False)


def make_module(group: GroupTable, generator_matrices, p: int) -> KGModule:
    mats = [linalg.as_matrix(M, p) for M in generator_matrices]
    if len(mats) != len(group.generators):
        raise ModuleError(f"{len(mats)} matrices for {len(group.generators)} generators")
    if mats:
        n = mats[0].shape[0]
    else:
        n = 0
    for k, M in enumerate(mats):
        if M.shape != (n, n):
            raise ModuleError(f"generator matrix {k} has shape {M.shape}, expected ({n}, {n})")
        if linalg.inverse(M, p) is None:
            raise ModuleError(f"generator matrix {k} is singular")
    rho: list = [None] * group.order
    rho[0] = linalg.identity(n, p)
    for g in sorted(range(group.order), key=lambda g: len(group.gen_words[g]))[1:]:
        word = group.gen_words[g]
        prev = group.evaluate_word(word[:-1])
        rho[g] = linalg.matmul(rho[prev], mats[word[-1]], p)
    return KGModule(group, p, rho)


def trivial_module(group: GroupTable, p: int, dim: int = 1) -> KGModule:
    return KGModule(group, p, [linalg.identity(dim, p)] * group.order, validate=False)


def regular_module(group: GroupTable, p: int) -> KGModule:
    """Basis e_x (x in G) with ``e_x . g = e_{xg}``."""
    n = group.order
    rho = []
    for g in range(n):
        M = np.zeros((n, n), dtype=linalg.dtype_for(p))
        for x in range(n):
            M[x, group.mult[x][g]] = 1
        rho.append(M)
    return KGModule(group, p, rho, validate=False)


def permutation_module(group: GroupTable, p: int) -> KGModule:
    """Basis e_i of the permuted points with ``e_i . g = e_{g(i)}``."""
    if group.perms is None:
        raise ModuleError("group was not built from permutations")
    n = len(group.perms[0])
    rho = []
    for g in range(group.order):
        M = np.zeros((n, n), dtype=linalg.dtype_for(p))
        for i in range(n):
            M[i, group.perms[g][i]] = 1
        rho.append(M)
    return KGModule(group, p, rho)


def direct_sum(M: KGModule, N: KGModule) -> KGModule:
    _same_group(M, N)
    rho = []
    for a, b in zip(M.rho, N.rho):
        Z = np.zeros((M.dim + N.dim, M.dim + N.dim), dtype=a.dtype)
        Z[: M.dim, : M.dim] = a
        Z[M.dim:, M.dim:] = b
        rho.append(Z)
    return KGModule(M.group, M.p, rho, validate=False)


def tensor_product(M: KGModule, N: KGModule) -> KGModule:
    _same_group(M, N)
    return KGModule(M.group, M.p, [np.kron(a, b) % M.p for a, b in zip(M.rho, N.rho)])


def _same_group(M: KGModule, N: KGModule) -> None:
    if M.group != N.group or M.p != N.p:
        raise ModuleError("modules belong to different groups or fields")


def _subgroup_gens(M: KGModule, H: Subgroup | None) -> Sequence[int]:
    if H is None:
        return M.group.generators
    if H.parent != M.group:
        raise ModuleError("subgroup of a different group")
    return H.generators


def fixed_points(M: KGModule, H: Subgroup | None = None) -> np.ndarray:
    """Echelon basis (rows) of the vectors fixed by every element of H (default: G)."""
    p, n = M.p, M.dim
    gens = _subgroup_gens(M, H)
    if not gens:
        return linalg.identity(n, p)
    eye = linalg.identity(n, p)
    stacked = np.hstack([(M.rho[g] - eye) % p for g in gens])
    return linalg.left_nullspace(stacked, p)


def _commutant_system(M: KGModule, N: KGModule, gens) -> np.ndarray:
    p, m, n = M.p, M.dim, N.dim
    blocks = [
        (np.kron(M.rho[g], linalg.identity(n, p)) - np.kron(linalg.identity(m, p), N.rho[g].T)) % p
        for g in gens
    ]
    if not blocks:
        return np.zeros((0, m * n), dtype=linalg.dtype_for(p))
    return np.vstack(blocks)


def hom_space(M: KGModule, N: KGModule) -> list[np.ndarray]:
    """Basis of matrices X with ``rho_M(g) X = X rho_N(g)`` for all g."""
    _same_group(M, N)
    sol = linalg.nullspace(_commutant_system(M, N, M.group.generators), M.p)
    return [row.reshape(M.dim, N.dim) for row in sol]


def submodule_span(M: KGModule, vectors) -> np.ndarray:
    """Echelon basis of the smallest submodule containing ``vectors``."""
    p = M.p
    vecs = linalg.as_matrix(vectors, p, ncols=M.dim)
    if vecs.shape[0] == 0:
        return vecs
    basis = linalg.row_space(vecs, p)
    while True:
        images = [linalg.matmul(basis, M.rho[s], p) for s in M.group.generators]
        grown = linalg.row_space(np.vstack([basis] + images), p)
        if grown.shape[0] == basis.shape[0]:
            return grown
        basis = grown


def _normalized_vectors(n: int, p: int):
    """Nonzero vectors of F_p^n whose first nonzero entry is 1."""
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def is_simple(M: KGModule, cap: int = ENUMERATION_CAP) -> bool:
    """Exhaustive check that every nonzero vector generates M."""
    if M.dim == 0:
        return False
    if M.p ** M.dim > cap:
        raise ModuleError(f"p^dim = {M.p ** M.dim} exceeds the enumeration cap {cap}")
    p = M.p
    orbit_mats = np.hstack([M.rho[g] for g in range(M.group.order)])
    for v in _normalized_vectors(M.dim, p):
        # the orbit of v spans the cyclic submodule it generates
        images = linalg.matmul(np.array([v]), orbit_mats, p).reshape(M.group.order, M.dim)
        if linalg.rank(images, p) < M.dim:
            return False
    return True


def socle(M: KGModule, simples: Sequence[KGModule], check_simple: bool = True) -> np.ndarray:
    """Sum of the images of all maps from the given simple modules into M."""
    p = M.p
    rows = []
    for k, S in enumerate(simples):
        _same_group(S, M)
        if check_simple and not is_simple(S):
            raise ModuleError(f"catalog module {k} is not simple")
        for X in hom_space(S, M):
            rows.append(X)
    if not rows:
        return np.zeros((0, M.dim), dtype=linalg.dtype_for(p))
    return linalg.row_space(np.vstack(rows), p)


def higman_witness(M: KGModule, H: Subgroup) -> np.ndarray | None:
    """alpha commuting with H whose relative trace over H-cosets is the identity, or None."""
    p, n, G = M.p, M.dim, M.group
    if H.parent != G:
        raise ModuleError("subgroup of a different group")
    commute = _commutant_system(M, M, H.generators)
    reps = cross_section(H).reps
    trace_map = np.zeros((n * n, n * n), dtype=linalg.dtype_for(p))
    for g in reps:
        trace_map = (trace_map + np.kron(M.rho[G.inverse[g]], M.rho[g].T)) % p
    A = np.vstack([commute, trace_map]) if commute.shape[0] else trace_map
    b = np.concatenate([np.zeros(commute.shape[0], dtype=A.dtype),
                        linalg.identity(n, p).reshape(-1)])
    x = linalg.solve(A, b, p)
    if x is None:
        return None
    alpha = x.reshape(n, n)
    if not verify_higman(M, H, alpha):  # pragma: no cover - solver invariant
        raise AssertionError("Higman witness failed re-verification")
    return alpha


def verify_higman(M: KGModule, H: Subgroup, alpha: np.ndarray) -> bool:
    p, G = M.p, M.group
    for h in H.generators:
        if not np.array_equal(linalg.matmul(alpha, M.rho[h], p), linalg.matmul(M.rho[h], alpha, p)):
            return False
    total = np.zeros_like(alpha)
    for g in cross_section(H).reps:
        total = (total + linalg.matmul(linalg.matmul(M.rho[G.inverse[g]], alpha, p), M.rho[g], p)) % p
    return np.array_equal(total, linalg.identity(M.dim, p))


def is_projective_module(M: KGModule) -> bool:
    return higman_witness(M, M.group.trivial()) is not None


def slice_monomials(A: AlgebraAction, d: int) -> list[tuple[int, ...]]:
    if A.graded:
        return A.ring.monomials_of_degree(d)
    if not A.filtration_preserving:
        raise ModuleError("action raises degrees; slices are not submodules")
    return A.ring.monomials_up_to(d)


def graded_slice_module(A: AlgebraAction, d: int) -> tuple[KGModule, list[tuple[int, ...]]]:
    """The degree-d slice (degree <= d if filtered) as a module, with its monomial basis."""
    basis = slice_monomials(A, d)
    index = {m: i for i, m in enumerate(basis)}
    p, n = A.p, len(basis)
    rho = []
    for g in range(A.group.order):
        M = np.zeros((n, n), dtype=linalg.dtype_for(p))
        for i, m in enumerate(basis):
            for mm, c in A.act(A.ring.monomial(m), g).terms.items():
                M[i, index[mm]] = c
        rho.append(M)
    return KGModule(A.group, p, rho, validate=False), basis


def slice_socle(A: AlgebraAction, d: int, simples: Sequence[KGModule], check_simple: bool = True
                ) -> list[Polynomial]:
    M, basis = graded_slice_module(A, d)
    return [from_vector(A.ring, basis, row) for row in socle(M, simples, check_simple)]


def algebra_socle(A: AlgebraAction, max_degree: int, simples: Sequence[KGModule]) -> list[Polynomial]:
    """Socle elements of the slices of degrees 1..max_degree; they generate the socle subalgebra there."""
    for k, S in enumerate(simples):
        if not is_simple(S):
            raise ModuleError(f"catalog module {k} is not simple")
    out: list[Polynomial] = []
    seen = set()
    for d in range(1, max_degree + 1):
        for f in slice_socle(A, d, simples, check_simple=False):
            if f not in seen:
                seen.add(f)
                out.append(f)
    return out


def find_isomorphism(M: KGModule, N: KGModule, tries: int = 2000, seed: int = 0) -> np.ndarray | None:
    """An invertible intertwiner M -> N, searched in the Hom space."""
    if M.dim != N.dim:
        return None
    basis = hom_space(M, N)
    if not basis:
        return None
    p = M.p
    if p ** len(basis) <= 2**16:
        coeff_iter = itertools.product(range(p), repeat=len(basis))
    else:
        rng = np.random.default_rng(seed)
        coeff_iter = (tuple(int(c) for c in rng.integers(0, p, len(basis))) for _ in range(tries))
    for coeffs in coeff_iter:
        X = sum((c * B for c, B in zip(coeffs, basis)), np.zeros_like(basis[0])) % p
        if linalg.inverse(X, p) is not None:
            return X
    return None


def module_to_json(M: KGModule) -> dict:
    return {"p": M.p, "dim": M.dim, "generator_matrices": [[[int(x) for x in row] for row in m]
                                                          for m in M.generator_matrices()]}
