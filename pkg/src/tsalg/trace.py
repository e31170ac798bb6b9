"""Traces, relative transfers, point search and invariant spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .actions import AlgebraAction, restrict_action
from .groups import Subgroup, cross_section, sylow_subgroup
from .parallel import pmap
from .poly import Polynomial, from_vector, grlex_key

FOUND = "found"
NONE_GRADED_EXACT = "none_graded_exact"
INCONCLUSIVE = "inconclusive_at_bound"


def trace_full(A: AlgebraAction, f: Polynomial) -> Polynomial:
    """Sum of f over all group elements."""
    total = A.ring.zero()
    for g in range(A.group.order):
        total = total + A.act(f, g)
    return total


def is_invariant_under(A: AlgebraAction, f: Polynomial, H: Subgroup) -> bool:
    return all(A.act(f, g) == f for g in H.generators)


def rel_trace(A: AlgebraAction, H: Subgroup, Y: Subgroup, f: Polynomial,
              reps: Sequence[int] | None = None) -> Polynomial:
    """Transfer from H-invariants to Y-invariants: sum of ``f r`` over coset reps of H in Y."""
    if not set(H.elements) <= set(Y.elements):
        raise ValueError("H is not contained in Y")
    if not is_invariant_under(A, f, H):
        raise ValueError("f is not invariant under H")
    if reps is None:
        reps = cross_section(H, within=Y).reps
    total = A.ring.zero()
    for r in reps:
        total = total + A.act(f, r)
    return total


def verify_invariant(A: AlgebraAction, f: Polynomial) -> bool:
    return all(A.act(f, g) == f for g in A.group.generators)


@dataclass
class PointSearchResult:
    status: str
    witness: Polynomial | None = None
    bound: int = 0
    details: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None else str(self.witness),
            "bound": self.bound,
            **{k: self.details[k] for k in sorted(self.details)},
        }


def _slice_monomials(A: AlgebraAction, d: int, ascending: bool) -> list[tuple[int, ...]]:
    if A.graded:
        monos = A.ring.monomials_of_degree(d)
        return monos[::-1] if ascending else monos
    if not A.filtration_preserving:
        raise ValueError("action raises degrees; degree slices are not stable")
    return A.ring.monomials_up_to(d, ascending=ascending)


def _traces(A: AlgebraAction, polys: Sequence[Polynomial], workers: int = 1) -> list[Polynomial]:
    return pmap(lambda f: trace_full(A, f), polys, workers)


def _solve_trace_one(A: AlgebraAction, monos, workers: int = 1) -> Polynomial | None:
    ring = A.ring
    traces = _traces(A, [ring.monomial(m) for m in monos], workers)
    rows = sorted({m for t in traces for m in t.terms} | {ring.one_monomial}, key=grlex_key)
    index = {m: i for i, m in enumerate(rows)}
    M = np.zeros((len(rows), len(monos)), dtype=linalg.dtype_for(A.p))
    for j, t in enumerate(traces):
        for m, c in t.terms.items():
            M[index[m], j] = c
    b = np.zeros(len(rows), dtype=M.dtype)
    b[index[ring.one_monomial]] = 1
    x = linalg.solve(M, b, A.p)
    if x is None:
        return None
    return from_vector(ring, monos, x)


def find_point(A: AlgebraAction, max_degree: int, workers: int = 1) -> PointSearchResult:
    """Search for a with trace(a) = 1 among polynomials of degree <= max_degree.

    Degrees are tried in increasing order so the witness has minimal degree.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    p, n = A.p, A.group.order
    if n % p:
        w = A.ring.const(pow(n, -1, p))
        return PointSearchResult(FOUND, w, 0, {"method": "inverse_group_order"})
    if A.graded:
        # trace preserves degree and kills constants
        return PointSearchResult(NONE_GRADED_EXACT, None, max_degree)
    if not A.filtration_preserving:
        raise ValueError("point search needs an action preserving the degree filtration")
    for d in range(max_degree + 1):
        monos = A.ring.monomials_up_to(d, ascending=True)
        w = _solve_trace_one(A, monos, workers)
        if w is not None:
            if trace_full(A, w) != 1:  # pragma: no cover - solver invariant
                raise AssertionError("point witness failed re-verification")
            return PointSearchResult(FOUND, w, d, {"method": "linear_solve"})
    return PointSearchResult(INCONCLUSIVE, None, max_degree)


def is_trace_surjective(A: AlgebraAction, max_degree: int, use_sylow: bool = True,
                        workers: int = 1) -> PointSearchResult:
    """Point search, by default on a Sylow p-subgroup with the point lifted back to G."""
    G, p = A.group, A.p
    P = sylow_subgroup(G, p)
    if not use_sylow or P.order == G.order or P.order == 1:
        return find_point(A, max_degree, workers)
    res = restrict_action(A, P)
    found = find_point(res, max_degree, workers)
    details = {"sylow_order": P.order, "sylow_elements": list(P.elements)}
    if not found.found:
        return PointSearchResult(found.status, None, found.bound, details)
    m = G.order // P.order
    lifted = found.witness.scale(pow(m, -1, p))
    if trace_full(A, lifted) != 1:  # pragma: no cover - guaranteed by transitivity of transfer
        raise AssertionError("lifted point failed re-verification")
    details["restricted_witness"] = str(found.witness)
    return PointSearchResult(FOUND, lifted, found.bound, details)


def restrict_point(A: AlgebraAction, H: Subgroup, a: Polynomial) -> Polynomial:
    """From a G-point a, the H-point obtained by summing ``a r^-1`` over right coset reps of H."""
    G = A.group
    total = A.ring.zero()
    for r in cross_section(H).reps:
        total = total + A.act(a, G.inverse[r])
    return total


def invariant_basis(A: AlgebraAction, d: int) -> list[Polynomial]:
    """Echelon basis of the invariants of degree d (graded) or degree <= d (filtered)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    monos = _slice_monomials(A, d, ascending=False)
    index = {m: i for i, m in enumerate(monos)}
    ring = A.ring
    blocks = []
    for g in A.group.generators:
        block = np.zeros((len(monos), len(monos)), dtype=linalg.dtype_for(A.p))
        for j, m in enumerate(monos):
            f = A.act(ring.monomial(m), g) - ring.monomial(m)
            for mm, c in f.terms.items():
                block[index[mm], j] = c
        blocks.append(block)
    M = np.vstack(blocks) if blocks else np.zeros((0, len(monos)), dtype=linalg.dtype_for(A.p))
    return [from_vector(ring, monos, row) for row in linalg.nullspace(M, A.p)]


def trace_kernel_basis(A: AlgebraAction, d: int) -> list[Polynomial]:
    """Echelon basis of the kernel of the trace on the degree-d (or <= d) slice."""
    monos = _slice_monomials(A, d, ascending=False)
    ring = A.ring
    traces = [trace_full(A, ring.monomial(m)) for m in monos]
    rows = sorted({m for t in traces for m in t.terms}, key=grlex_key)
    index = {m: i for i, m in enumerate(rows)}
    M = np.zeros((len(rows), len(monos)), dtype=linalg.dtype_for(A.p))
    for j, t in enumerate(traces):
        for m, c in t.terms.items():
            M[index[m], j] = c
    return [from_vector(ring, monos, row) for row in linalg.nullspace(M, A.p)]


def subalgebra_contains(generators: Sequence[Polynomial], target: Polynomial, degree_cap: int) -> bool:
    """Whether target is a linear combination of products of generators of degree <= cap.

    False means only that the cap was not enough.
    """
    if target.degree() > degree_cap:
        raise ValueError(f"cap {degree_cap} is below the target degree {target.degree()}")
    ring = target.ring
    gens = [g for g in generators if not g.is_constant()]
    if any(g.ring != ring for g in gens):
        raise ValueError("generators and target live in different rings")
    degs = [g.degree() for g in gens]
    span = linalg.SparseEchelon(ring.p, order_key=grlex_key)
    span.add(ring.one().terms)
    # depth-first over exponent vectors with nondecreasing generator index
    stack = [(ring.one(), 0, 0)]
    while stack:
        prod, start, deg = stack.pop()
        for i in range(start, len(gens)):
            nd = deg + degs[i]
            if nd > degree_cap:
                continue
            q = prod * gens[i]
            span.add(q.terms)
            stack.append((q, i, nd))
    return span.contains(target.terms)


__all__ = [
    "FOUND", "NONE_GRADED_EXACT", "INCONCLUSIVE", "PointSearchResult", "trace_full", "rel_trace",
    "verify_invariant", "find_point", "is_trace_surjective", "restrict_point", "invariant_basis",
    "trace_kernel_basis", "subalgebra_contains", "is_invariant_under",
]
