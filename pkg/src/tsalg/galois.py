"""Galois-extension witnesses and point-stabilizer enumeration."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels, linalg
from .actions import AlgebraAction
from .fields import ExtField
from .groups import Subgroup
from .parallel import pmap
from .poly import Polynomial, evaluate_point, grlex_key

ENUMERATION_CAP = 2**20
FOUND = "found"
NONE_AT_BOUND = "none_at_bound"


@dataclass
class ChrWitness:
    pairs: list

    def to_json(self) -> list:
        return [[str(x), str(y)] for x, y in self.pairs]


@dataclass
class ChrSearchResult:
    status: str
    witness: ChrWitness | None = None
    y_degree: int = 0
    x_degree: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json(),
            "x_degree": self.x_degree,
            "y_degree": self.y_degree,
        }


def chr_sums(A: AlgebraAction, H: Subgroup, pairs) -> list[Polynomial]:
    """``sum_i x_i (y_i)h`` for every h in H, in element order."""
    out = []
    for h in H.elements:
        total = A.ring.zero()
        for x, y in pairs:
            total = total + x * A.act(y, h)
        out.append(total)
    return out


def verify_chr(A: AlgebraAction, H: Subgroup, pairs) -> bool:
    for h, s in zip(H.elements, chr_sums(A, H, pairs)):
        if s != (1 if h == 0 else 0):
            return False
    return True


def search_chr(A: AlgebraAction, H: Subgroup, y_degree: int, x_degree: int) -> ChrSearchResult:
    """Fix the y_i as all monomials of degree <= y_degree and solve linearly for the x_i."""
    if y_degree < 0 or x_degree < 0:
        raise ValueError("degree bounds must be nonnegative")
    ring = A.ring
    ys = [ring.monomial(m) for m in ring.monomials_up_to(y_degree, ascending=True)]
    xs = ring.monomials_up_to(x_degree, ascending=True)
    columns = []   # per unknown: {(h, monomial): coeff}
    moved = {(h, i): A.act(y, h) for h in H.elements for i, y in enumerate(ys)}
    for i in range(len(ys)):
        for mu in xs:
            col = {}
            for h in H.elements:
                for m, c in moved[(h, i)].terms.items():
                    col[(h, tuple(a + b for a, b in zip(m, mu)))] = c
            columns.append(col)
    keys = {(0, ring.one_monomial)}
    for col in columns:
        keys.update(col)
    rows = sorted(keys, key=lambda k: (k[0], grlex_key(k[1])))
    index = {k: r for r, k in enumerate(rows)}
    M = np.zeros((len(rows), len(columns)), dtype=linalg.dtype_for(A.p))
    for j, col in enumerate(columns):
        for k, c in col.items():
            M[index[k], j] = c
    b = np.zeros(len(rows), dtype=M.dtype)
    b[index[(0, ring.one_monomial)]] = 1
    sol = linalg.solve(M, b, A.p)
    if sol is None:
        return ChrSearchResult(NONE_AT_BOUND, None, y_degree, x_degree)
    pairs = []
    nx = len(xs)
    for i, y in enumerate(ys):
        x = Polynomial(ring, {mu: int(sol[i * nx + k]) for k, mu in enumerate(xs)})
        if not x.is_zero():
            pairs.append((x, y))
    if not verify_chr(A, H, pairs):  # pragma: no cover - solver invariant
        raise AssertionError("CHR witness failed re-verification")
    return ChrSearchResult(FOUND, ChrWitness(pairs), y_degree, x_degree)


# --- point stabilizers -------------------------------------------------------

@dataclass
class LevelReport:
    level: int
    q: int
    points_checked: int
    worst_stabilizer_order: int
    order_histogram: dict
    bad_points: list = field(default_factory=list)

    @property
    def p_locally_free(self) -> bool:
        return not self.bad_points

    def to_json(self) -> dict:
        return {
            "bad_points": self.bad_points,
            "level": self.level,
            "order_histogram": {str(k): self.order_histogram[k] for k in sorted(self.order_histogram)},
            "p_locally_free": self.p_locally_free,
            "points_checked": self.points_checked,
            "q": self.q,
            "worst_stabilizer_order": self.worst_stabilizer_order,
        }


@dataclass
class StabilizerReport:
    p: int
    level: int
    levels: list

    @property
    def points_checked(self) -> int:
        return sum(r.points_checked for r in self.levels)

    @property
    def worst_stabilizer_order(self) -> int:
        return max((r.worst_stabilizer_order for r in self.levels), default=1)

    @property
    def p_locally_free(self) -> bool:
        return all(r.p_locally_free for r in self.levels)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "levels": [r.to_json() for r in self.levels],
            "note": f"rational points over F_{{p^k}} for k <= {self.level} only",
            "p_locally_free": self.p_locally_free,
            "points_checked": self.points_checked,
            "worst_stabilizer_order": self.worst_stabilizer_order,
        }


def _encode_action(A: AlgebraAction, F: ExtField):
    n = A.nvars
    offsets = [0]
    coef_logs = []
    exps = []
    log = F.log
    for g in range(1, A.group.order):
        for v in range(n):
            for mono, c in A.images[g][v].terms.items():
                coef_logs.append(int(log[F.embed(c)]))
                exps.append(list(mono))
            offsets.append(len(coef_logs))
    exps_arr = np.array(exps, dtype=np.int64).reshape(len(exps), n)
    return (np.array(offsets, dtype=np.int64), np.array(coef_logs, dtype=np.int64), exps_arr)


def point_of_index(idx: int, q: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(idx % q)
        idx //= q
    return tuple(out)


def stabilizer_orders_at_level(A: AlgebraAction, k: int, workers: int = 1, chunk: int = 1 << 14,
                               backend: str | None = None) -> tuple[ExtField, np.ndarray]:
    F = ExtField(A.p, k)
    n = A.nvars
    npoints = F.q**n
    if npoints > ENUMERATION_CAP:
        raise ValueError(f"{npoints} points at level {k} exceed the enumeration cap {ENUMERATION_CAP}")
    offsets, coef_logs, exps = _encode_action(A, F)
    impl = kernels.backend(backend)
    args = (F.q, n, F.log.astype(np.int64), F.zech.astype(np.int64), offsets, coef_logs, exps,
            A.group.order - 1)
    starts = list(range(0, npoints, chunk))
    parts = pmap(lambda s: impl.stabilizer_orders(*args, s, min(chunk, npoints - s)), starts, workers)
    return F, np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def point_stabilizers(A: AlgebraAction, ext_degree: int, workers: int = 1, max_bad_points: int = 20,
                      backend: str | None = None) -> StabilizerReport:
    """Stabilizer orders of all points over F_{p^k}, k = 1..ext_degree."""
    if ext_degree < 1:
        raise ValueError("extension level must be at least 1")
    p, n = A.p, A.nvars
    levels = []
    for k in range(1, ext_degree + 1):
        F, orders = stabilizer_orders_at_level(A, k, workers, backend=backend)
        hist = Counter(int(x) for x in orders)
        bad_idx = np.nonzero(orders % p == 0)[0]
        bad = [
            {"point": [F.format(x) for x in point_of_index(int(i), F.q, n)], "stabilizer_order": int(orders[i])}
            for i in bad_idx[:max_bad_points]
        ]
        levels.append(LevelReport(k, F.q, int(orders.size), int(orders.max()) if orders.size else 1,
                                  dict(hist), bad))
    return StabilizerReport(p, ext_degree, levels)


def stabilizer_of(A: AlgebraAction, point: Sequence[int], F: ExtField) -> list[int]:
    """Elements g with ``(x_i)g`` evaluating to ``point[i]`` for all i (direct evaluation)."""
    out = []
    for g in range(A.group.order):
        if all(evaluate_point(A.images[g][i], point, F) == point[i] for i in range(A.nvars)):
            out.append(g)
    return out
