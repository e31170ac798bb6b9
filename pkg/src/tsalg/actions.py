"""k-G algebra structures on polynomial rings.

An action stores the image of every variable under every group element;
``act(f, g)`` substitutes those images into f. Actions are right actions:
``act(act(f, g), h) == act(f, g*h)``, which every constructor verifies
exhaustively before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fields import PrimeField
from .groups import GroupTable, Subgroup
from .poly import Polynomial, PolyRing, substitute


class ActionLawError(ValueError):
    """Raised when ``(v)g`` substituted along h differs from ``(v)(gh)``."""

    def __init__(self, message: str, g: int | None = None, h: int | None = None, var: str | None = None):
        super().__init__(message)
        self.g, self.h, self.var = g, h, var


class AlgebraAction:
    """A validated right action of ``group`` on ``ring`` by algebra automorphisms."""

    def __init__(self, ring: PolyRing, group: GroupTable, images: Sequence[Sequence[Polynomial]],
                 validate: bool = True):
        self.ring = ring
        self.group = group
        self.images = tuple(tuple(row) for row in images)
        if len(self.images) != group.order:
            raise ActionLawError(f"need images for {group.order} elements, got {len(self.images)}")
        for g, row in enumerate(self.images):
            if len(row) != ring.nvars:
                raise ActionLawError(f"element {g}: {len(row)} images for {ring.nvars} variables", g=g)
            for f in row:
                if f.ring != ring:
                    raise ActionLawError(f"element {g}: image lies in a different ring", g=g)
        if validate:
            self._check_law()

    def _check_law(self) -> None:
        ring, G = self.ring, self.group
        for i, f in enumerate(self.images[0]):
            if f != ring.var(i):
                raise ActionLawError(f"identity moves {ring.vars[i]}", g=0, h=0, var=ring.vars[i])
        for g in range(G.order):
            for h in range(G.order):
                gh = G.mult[g][h]
                target = self.images[gh]
                for i, f in enumerate(self.images[g]):
                    if substitute(f, self.images[h], ring) != target[i]:
                        raise ActionLawError(
                            f"action law fails for g={g}, h={h}, variable {ring.vars[i]}",
                            g=g, h=h, var=ring.vars[i])

    def __repr__(self):
        return f"AlgebraAction(p={self.p}, vars={list(self.vars)}, |G|={self.group.order})"

    def __eq__(self, other):
        return (isinstance(other, AlgebraAction) and self.ring == other.ring
                and self.group == other.group and self.images == other.images)

    def __hash__(self):
        return hash((self.ring, self.group.order, self.images[1:2]))

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def field(self) -> PrimeField:
        return self.ring.field

    @property
    def vars(self) -> tuple[str, ...]:
        return self.ring.vars

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    @property
    def graded(self) -> bool:
        return all(f.is_homogeneous(1) for row in self.images for f in row)

    @property
    def filtration_preserving(self) -> bool:
        return all(f.degree() <= 1 for row in self.images for f in row)

    def act(self, f: Polynomial, g: int) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial is not over this action's variables")
        if g == 0:
            return f
        return substitute(f, self.images[g], self.ring)

    def parse(self, text: str) -> Polynomial:
        return self.ring.parse(text)

    def generator_images(self) -> list[list[Polynomial]]:
        return [list(self.images[s]) for s in self.group.generators]

    def linear_matrix(self, g: int) -> np.ndarray:
        """Row i holds the coefficients of ``(x_i)g`` on the variables (graded actions)."""
        n = self.nvars
        M = np.zeros((n, n), dtype=np.int64)
        for i, f in enumerate(self.images[g]):
            for j in range(n):
                e = [0] * n
                e[j] = 1
                M[i, j] = f.coefficient(tuple(e))
        return M


def act(A: AlgebraAction, f: Polynomial, g: int) -> Polynomial:
    return A.act(f, g)


def _images_from_generators(ring: PolyRing, group: GroupTable, gen_images) -> list[list[Polynomial]]:
    images: list = [None] * group.order
    images[0] = ring.gens()
    # gen_words are BFS words, so every proper prefix is already known
    order = sorted(range(group.order), key=lambda g: len(group.gen_words[g]))
    for g in order[1:]:
        word = group.gen_words[g]
        prefix = group.evaluate_word(word[:-1])
        s = gen_images[word[-1]]
        images[g] = [substitute(f, s, ring) for f in images[prefix]]
    return images


def make_action(field: PrimeField | int, vars: Sequence[str], group: GroupTable,
                generator_images: Sequence[Sequence[Polynomial | str]]) -> AlgebraAction:
    """Build and validate an action from the images of each generator.

    Images may be given as polynomials or as strings in the variable grammar.
    """
    ring = PolyRing(field, vars)
    if len(generator_images) != len(group.generators):
        raise ActionLawError(
            f"{len(generator_images)} image lists for {len(group.generators)} generators")
    gens = []
    for k, row in enumerate(generator_images):
        if len(row) != ring.nvars:
            raise ActionLawError(f"generator {k}: {len(row)} images for {ring.nvars} variables")
        gens.append([ring.parse(f) if isinstance(f, str) else f for f in row])
    return AlgebraAction(ring, group, _images_from_generators(ring, group, gens))


def trivial_action(field: PrimeField | int, vars: Sequence[str], group: GroupTable) -> AlgebraAction:
    ring = PolyRing(field, vars)
    return AlgebraAction(ring, group, [ring.gens()] * group.order)


def linear_action(field: PrimeField | int, group: GroupTable, matrices, vars: Sequence[str] | None = None
                  ) -> AlgebraAction:
    """``(x_i)g = sum_j M[g][i][j] x_j`` for each generator matrix M[g]."""
    mats = [np.asarray(M, dtype=object) for M in matrices]
    if not mats:
        n = len(vars) if vars is not None else 0
    else:
        n = mats[0].shape[0]
    for k, M in enumerate(mats):
        if M.shape != (n, n):
            raise ValueError(f"matrix {k} has shape {M.shape}, expected ({n}, {n})")
    vars = list(vars) if vars is not None else [f"x{i + 1}" for i in range(n)]
    if len(vars) != n:
        raise ValueError("variable count does not match matrix size")
    ring = PolyRing(field, vars)
    gen_images = []
    for M in mats:
        row_images = []
        for i in range(n):
            terms = {}
            for j in range(n):
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = int(M[i, j])
            row_images.append(Polynomial(ring, terms))
        gen_images.append(row_images)
    return make_action(ring.field, vars, group, gen_images)


def d_reg(group: GroupTable, field: PrimeField | int) -> AlgebraAction:
    """Dehomogenized symmetric algebra of the dual regular module.

    Variables ``y_<g>`` for g != e; the eliminated coordinate ``X_e`` is
    ``1 - sum y_g``.
    """
    names = [f"y_{g}" for g in range(1, group.order)]
    ring = PolyRing(field, names)
    gens = ring.gens()
    x_e = ring.one() - sum(gens, ring.zero())

    def coord(g: int) -> Polynomial:
        return x_e if g == 0 else gens[g - 1]

    images = [[coord(group.mult[g][h]) for g in range(1, group.order)] for h in range(group.order)]
    return AlgebraAction(ring, group, images)


def dehomogenize(A: AlgebraAction, x: Polynomial) -> AlgebraAction:
    """Set the invariant linear form x to 1, eliminating its last variable."""
    if not A.graded:
        raise ValueError("dehomogenization needs a graded action")
    if x.is_zero():
        raise ValueError("cannot dehomogenize at 0")
    if not x.is_homogeneous(1):
        raise ValueError("x must be homogeneous of degree 1")
    for s in A.group.generators:
        if A.act(x, s) != x:
            raise ValueError("x is not invariant")
    ring = A.ring
    support = sorted(x.variables_used())
    v = support[-1]
    e = [0] * ring.nvars
    e[v] = 1
    c = x.coefficient(tuple(e))
    keep = [i for i in range(ring.nvars) if i != v]
    new_ring = PolyRing(ring.field, [ring.vars[i] for i in keep])
    elim: dict[int, Polynomial] = {}
    for k, i in enumerate(keep):
        elim[i] = new_ring.var(k)
    rest = x - ring.var(v).scale(c)
    rest_new = substitute(rest, elim, new_ring) if not rest.is_zero() else new_ring.zero()
    elim[v] = (new_ring.one() - rest_new).scale(ring.field.inv(c))
    images = [[substitute(A.images[g][i], elim, new_ring) for i in keep] for g in range(A.group.order)]
    return AlgebraAction(new_ring, A.group, images)


@dataclass(frozen=True)
class AlgebraMorphism:
    """Algebra map determined by the images of the source variables."""

    source: AlgebraAction
    target: AlgebraAction
    var_images: tuple

    def __post_init__(self):
        imgs = tuple(self.target.ring.parse(f) if isinstance(f, str) else f for f in self.var_images)
        object.__setattr__(self, "var_images", imgs)
        if self.source.p != self.target.p:
            raise ValueError("source and target have different fields")
        if self.source.group.mult != self.target.group.mult:
            raise ValueError("source and target have different groups")
        if len(imgs) != self.source.nvars:
            raise ValueError("need one image per source variable")
        if any(f.ring != self.target.ring for f in imgs):
            raise ValueError("images must lie in the target ring")

    def __call__(self, f: Polynomial) -> Polynomial:
        return substitute(f, self.var_images, self.target.ring)

    def compose(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """``self ∘ other``: apply other first."""
        return AlgebraMorphism(other.source, self.target, tuple(self(f) for f in other.var_images))

    @staticmethod
    def identity(A: AlgebraAction) -> "AlgebraMorphism":
        return AlgebraMorphism(A, A, tuple(A.ring.gens()))


def is_equivariant_morphism(m: AlgebraMorphism) -> bool:
    S, T = m.source, m.target
    for g in S.group.generators:
        for i in range(S.nvars):
            if m(S.images[g][i]) != T.act(m.var_images[i], g):
                return False
    return True


def morphism_linear_part(m: AlgebraMorphism) -> np.ndarray:
    """Matrix whose row v is the degree-1 part of m(v)."""
    if not (m.source.graded and m.target.graded):
        raise ValueError("linear part needs graded source and target")
    n, k = m.source.nvars, m.target.nvars
    M = np.zeros((n, k), dtype=np.int64)
    for i, f in enumerate(m.var_images):
        for j in range(k):
            e = [0] * k
            e[j] = 1
            M[i, j] = f.coefficient(tuple(e))
    return M


def is_unitriangular(A: AlgebraAction, lower: bool = True) -> bool:
    """Whether every degree-1 matrix is unitriangular in the given variable order.

    Only the declared order is tested; no triangularizing basis is searched.
    """
    if not A.graded:
        return False
    n = A.nvars
    for g in A.group.generators:
        M = A.linear_matrix(g)
        for i in range(n):
            if M[i, i] != 1:
                return False
            off = M[i, i + 1:] if lower else M[i, :i]
            if np.any(off):
                return False
    return True


def point_morphism(A: AlgebraAction, a: Polynomial) -> AlgebraMorphism:
    """The morphism out of D_reg sending ``y_g`` to ``a g``; needs trace(a) = 1."""
    G = A.group
    total = A.ring.zero()
    for g in range(G.order):
        total = total + A.act(a, g)
    if total != 1:
        raise ValueError("element is not a point (trace differs from 1)")
    D = d_reg(G, A.field)
    return AlgebraMorphism(D, A, tuple(A.act(a, g) for g in range(1, G.order)))


def restrict_action(A: AlgebraAction, H: Subgroup) -> AlgebraAction:
    """The same algebra viewed as an H-algebra (H numbered as in ``H.as_group()``)."""
    if H.parent != A.group:
        raise ValueError("subgroup does not belong to the acting group")
    return AlgebraAction(A.ring, H.as_group(), [A.images[g] for g in H.elements], validate=False)
