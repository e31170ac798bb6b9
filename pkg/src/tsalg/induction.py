"""Tensor and product induction of algebras from a subgroup, and their adjunctions.

Notation: G acts, H is a subgroup with right-coset cross-section R =
(r_0 = e, r_1, ...). For ``r_j g = h r_k`` we write ``coset_data(R, j, g)
= (h, k)``. An H-algebra A must act through ``H.as_group()``, so its
element indices are local positions in ``H.elements``.

Tensor induction has variables ``r<j>_<v>``, one copy of A's variables
per representative; product induction consists of tuples of elements of
A, one slot per representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .actions import AlgebraAction, AlgebraMorphism, is_equivariant_morphism, restrict_action
from .groups import CrossSection, GroupTable, Subgroup, coset_data
from .poly import Polynomial, PolyRing, substitute


def _local(H: Subgroup):
    return {g: i for i, g in enumerate(H.elements)}


def _check_base(A: AlgebraAction, R: CrossSection) -> None:
    # compare tables: for H = G the subgroup view and the group itself number elements alike
    if A.group.mult != R.subgroup.as_group().mult:
        raise ValueError("the algebra must act through the subgroup of the cross-section")


# --- wreath product --------------------------------------------------------

@dataclass(frozen=True)
class WreathElement:
    """(b, s) in H wr Sym(R): ``base[j]`` in H (parent index), ``perm[j]`` the image slot."""

    group: GroupTable
    base: tuple
    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a bijection of the slots")

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        M = self.group.mult
        base = tuple(M[self.base[j]][other.base[self.perm[j]]] for j in range(len(self.perm)))
        perm = tuple(other.perm[self.perm[j]] for j in range(len(self.perm)))
        return WreathElement(self.group, base, perm)

    def inverse(self) -> "WreathElement":
        m = len(self.perm)
        inv_perm = [0] * m
        for j, k in enumerate(self.perm):
            inv_perm[k] = j
        base = tuple(self.group.inverse[self.base[inv_perm[j]]] for j in range(m))
        return WreathElement(self.group, base, tuple(inv_perm))

    @staticmethod
    def from_base(group: GroupTable, base: Sequence[int]) -> "WreathElement":
        return WreathElement(group, tuple(base), tuple(range(len(base))))


def frobenius_embedding(R: CrossSection, g: int) -> WreathElement:
    data = [coset_data(R, j, g) for j in range(R.index)]
    return WreathElement(R.group, tuple(h for h, _ in data), tuple(k for _, k in data))


def shifted_section(R: CrossSection, shifts: Sequence[int]) -> CrossSection:
    """The cross-section ``r'_j = shifts[j] * r_j`` (shifts in H, shifts[0] = e)."""
    G = R.group
    if any(h not in R.subgroup for h in shifts):
        raise ValueError("shifts must lie in the subgroup")
    return CrossSection(R.subgroup, tuple(G.mult[h][r] for h, r in zip(shifts, R.reps)), R.within)


# --- tensor induction --------------------------------------------------------

def tensor_var_name(j: int, v: str) -> str:
    return f"r{j}_{v}"


class TensorInduced(AlgebraAction):
    """Tensor-induced G-algebra; remembers its base algebra and cross-section."""

    base: AlgebraAction
    section: CrossSection

    def slot_embedding(self, j: int) -> list[Polynomial]:
        """Images of the base variables under ``v -> x_{j,v}``."""
        n = self.base.nvars
        return [self.ring.var(j * n + i) for i in range(n)]

    def iota(self, j: int, f: Polynomial) -> Polynomial:
        if f.ring.nvars == 0:
            return self.ring.const(f.constant_term())
        return substitute(f, self.slot_embedding(j), self.ring)


def tensor_induce(A: AlgebraAction, R: CrossSection) -> TensorInduced:
    _check_base(A, R)
    G, n, m = R.group, A.nvars, R.index
    loc = _local(R.subgroup)
    ring = PolyRing(A.field, [tensor_var_name(j, v) for j in range(m) for v in A.vars])
    slot_maps = [[ring.var(j * n + i) for i in range(n)] for j in range(m)]
    images = []
    for g in range(G.order):
        row = []
        for j in range(m):
            h, k = coset_data(R, j, g)
            for i in range(n):
                row.append(substitute(A.images[loc[h]][i], slot_maps[k], ring))
        images.append(row)
    out = TensorInduced(ring, G, images)
    out.base = A
    out.section = R
    return out


def induce_morphism_tensor(phi: AlgebraMorphism, R: CrossSection,
                           source: TensorInduced | None = None, target: TensorInduced | None = None
                           ) -> AlgebraMorphism:
    """Functoriality: ``x_{j,v} -> iota_j(phi(v))``."""
    source = source or tensor_induce(phi.source, R)
    target = target or tensor_induce(phi.target, R)
    images = []
    for j in range(R.index):
        for f in phi.var_images:
            images.append(target.iota(j, f))
    return AlgebraMorphism(source, target, tuple(images))


# --- product induction -------------------------------------------------------

class TupleAlgebra:
    """Tuples of elements of an H-algebra, one per representative, with the induced G-action."""

    def __init__(self, base: AlgebraAction, section: CrossSection, validate: bool = True):
        _check_base(base, section)
        self.base = base
        self.section = section
        self.group = section.group
        self.components = section.index
        self._loc = _local(section.subgroup)
        self._moves = [[coset_data(section, j, g) for j in range(self.components)]
                       for g in range(self.group.order)]
        if validate:
            self._check_law()

    @property
    def p(self) -> int:
        return self.base.p

    def __repr__(self):
        return f"TupleAlgebra(components={self.components}, base={self.base!r})"

    def tuple(self, entries: Sequence[Polynomial | str | int]) -> tuple:
        if len(entries) != self.components:
            raise ValueError(f"need {self.components} entries")
        ring = self.base.ring
        out = []
        for f in entries:
            if isinstance(f, str):
                f = ring.parse(f)
            elif isinstance(f, int):
                f = ring.const(f)
            out.append(f)
        return tuple(out)

    def const(self, c: int) -> tuple:
        return tuple(self.base.ring.const(c) for _ in range(self.components))

    def diagonal(self, f: Polynomial) -> tuple:
        return tuple(f for _ in range(self.components))

    def unit_vector(self, j: int, f: Polynomial | None = None) -> tuple:
        ring = self.base.ring
        f = ring.one() if f is None else f
        return tuple(f if k == j else ring.zero() for k in range(self.components))

    def add(self, s: tuple, t: tuple) -> tuple:
        return tuple(a + b for a, b in zip(s, t))

    def sub(self, s: tuple, t: tuple) -> tuple:
        return tuple(a - b for a, b in zip(s, t))

    def mul(self, s: tuple, t: tuple) -> tuple:
        return tuple(a * b for a, b in zip(s, t))

    def scale(self, s: tuple, c: int) -> tuple:
        return tuple(a.scale(c) for a in s)

    def act(self, t: tuple, g: int) -> tuple:
        out: list = [None] * self.components
        for j, (h, k) in enumerate(self._moves[g]):
            out[k] = self.base.act(t[j], self._loc[h])
        return tuple(out)

    def trace(self, t: tuple) -> tuple:
        total = self.const(0)
        for g in range(self.group.order):
            total = self.add(total, self.act(t, g))
        return total

    def is_one(self, t: tuple) -> bool:
        return all(f == 1 for f in t)

    def algebra_generators(self) -> list[tuple]:
        """Idempotents e_j and the tuples v*e_j; they generate the algebra."""
        gens = []
        for j in range(self.components):
            gens.append(self.unit_vector(j))
            for v in self.base.ring.gens():
                gens.append(self.unit_vector(j, v))
        return gens

    def _check_law(self) -> None:
        G = self.group
        for t in self.algebra_generators():
            for g in range(G.order):
                tg = self.act(t, g)
                for h in range(G.order):
                    if self.act(tg, h) != self.act(t, G.mult[g][h]):
                        raise ValueError(f"tuple action law fails at g={g}, h={h}")


def product_induce(A: AlgebraAction, R: CrossSection) -> TupleAlgebra:
    return TupleAlgebra(A, R)


@dataclass(frozen=True)
class TupleMorphism:
    """Algebra map from a polynomial algebra into a tuple algebra.

    ``var_images[i]`` is the tuple assigned to source variable i. With
    ``subgroup`` set, source acts through ``subgroup.as_group()`` and
    equivariance is only required along that subgroup.
    """

    source: AlgebraAction
    target: TupleAlgebra
    var_images: tuple
    subgroup: Subgroup | None = None

    def __call__(self, f: Polynomial) -> tuple:
        ring = self.target.base.ring
        return tuple(
            substitute(f, [img[j] for img in self.var_images], ring)
            for j in range(self.target.components))

    def is_equivariant(self) -> bool:
        if self.subgroup is None:
            pairs = [(g, g) for g in self.source.group.generators]
        else:
            emb = self.subgroup.elements
            pairs = [(s, emb[s]) for s in self.source.group.generators]
        for s_src, s_tgt in pairs:
            for i in range(self.source.nvars):
                if self(self.source.images[s_src][i]) != self.target.act(self.var_images[i], s_tgt):
                    return False
        return True

    def after(self, phi: AlgebraMorphism) -> "TupleMorphism":
        """``self ∘ phi``."""
        return TupleMorphism(phi.source, self.target, tuple(self(f) for f in phi.var_images), self.subgroup)

    def __eq__(self, other):
        return (isinstance(other, TupleMorphism) and self.source == other.source
                and self.var_images == other.var_images)

    def __hash__(self):
        return hash(self.var_images)


def induce_morphism_product(phi: AlgebraMorphism, R: CrossSection):
    """Functoriality on tuples: apply phi slotwise."""
    src = product_induce(phi.source, R)
    tgt = product_induce(phi.target, R)

    def apply(t: tuple) -> tuple:
        return tuple(phi(f) for f in t)

    return src, tgt, apply


# --- adjunctions -------------------------------------------------------------

def _require_equivariant(alpha: AlgebraMorphism) -> None:
    if not is_equivariant_morphism(alpha):
        raise ValueError("morphism is not equivariant")


def chi(alpha: AlgebraMorphism, B: AlgebraAction, R: CrossSection,
        induced: TensorInduced | None = None) -> AlgebraMorphism:
    """From ``alpha: A -> res B`` to ``Ind(A) -> B``: ``x_{j,v} -> alpha(v) r_j``."""
    _require_equivariant(alpha)
    A = alpha.source
    induced = induced or tensor_induce(A, R)
    images = []
    for r in R.reps:
        for f in alpha.var_images:
            images.append(B.act(f, r))
    return AlgebraMorphism(induced, B, tuple(images))


def iota1_star(beta: AlgebraMorphism, A: AlgebraAction, R: CrossSection) -> AlgebraMorphism:
    """From ``beta: Ind(A) -> B`` to ``A -> res B``: ``v -> beta(x_{0,v})``."""
    _require_equivariant(beta)
    res_b = restrict_action(beta.target, R.subgroup)
    return AlgebraMorphism(A, res_b, tuple(beta.var_images[: A.nvars]))


def psi(alpha: AlgebraMorphism, B: AlgebraAction, R: CrossSection,
        target: TupleAlgebra | None = None) -> TupleMorphism:
    """From ``alpha: res B -> A`` to ``B -> Ind^x(A)``: slot j of b is ``alpha(b r_j^-1)``."""
    _require_equivariant(alpha)
    target = target or product_induce(alpha.target, R)
    G = R.group
    images = []
    for i in range(B.nvars):
        w = B.ring.var(i)
        images.append(tuple(alpha(B.act(w, G.inverse[r])) for r in R.reps))
    return TupleMorphism(B, target, tuple(images))


def pi1_star(beta: TupleMorphism, R: CrossSection) -> AlgebraMorphism:
    """From ``beta: B -> Ind^x(A)`` to ``res B -> A``: slot 0 of beta."""
    if not beta.is_equivariant():
        raise ValueError("morphism is not equivariant")
    res_b = restrict_action(beta.source, R.subgroup)
    return AlgebraMorphism(res_b, beta.target.base, tuple(t[0] for t in beta.var_images))


@dataclass
class SlotProjection:
    """Counit of product induction: ``res Ind^x(A) -> A``, slot 0."""

    algebra: TupleAlgebra

    def __call__(self, t: tuple) -> Polynomial:
        return t[0]

    def is_equivariant(self) -> bool:
        T = self.algebra
        H = T.section.subgroup
        loc = _local(H)
        for s in H.generators:
            for t in T.algebra_generators():
                if self(T.act(t, s)) != T.base.act(self(t), loc[s]):
                    return False
        return True


@dataclass
class UnitCounit:
    unit_tensor: AlgebraMorphism      # A -> res Ind(A)
    counit_tensor: AlgebraMorphism    # Ind(res B) -> B
    unit_product: TupleMorphism       # B -> Ind^x(res B)
    counit_product: SlotProjection    # res Ind^x(A) -> A

    def all_equivariant(self) -> bool:
        return (is_equivariant_morphism(self.unit_tensor) and is_equivariant_morphism(self.counit_tensor)
                and self.unit_product.is_equivariant() and self.counit_product.is_equivariant())


def unit_counit(A: AlgebraAction, B: AlgebraAction, R: CrossSection) -> UnitCounit:
    H = R.subgroup
    ind_a = tensor_induce(A, R)
    res_ind = restrict_action(ind_a, H)
    u_t = AlgebraMorphism(A, res_ind, tuple(ind_a.slot_embedding(0)))
    res_b = restrict_action(B, H)
    c_t = chi(AlgebraMorphism.identity(res_b), B, R)
    u_p = psi(AlgebraMorphism.identity(res_b), B, R)
    c_p = SlotProjection(product_induce(A, R))
    return UnitCounit(u_t, c_t, u_p, c_p)


def f_trace(alpha: TupleMorphism, A: AlgebraAction, R: CrossSection) -> AlgebraMorphism:
    """``v -> slot 0 of alpha(x_{0,v})`` for ``alpha: Ind(A) -> Ind^x(A')``."""
    if not alpha.is_equivariant():
        raise ValueError("morphism is not equivariant")
    target = alpha.target.base
    return AlgebraMorphism(A, target, tuple(alpha.var_images[i][0] for i in range(A.nvars)))


# --- triangle identities ---------------------------------------------------

def counit_after_induced_unit(A: AlgebraAction, R: CrossSection) -> bool:
    """``c_{Ind A} ∘ Ind(u_A)`` is the identity of Ind(A)."""
    ind_a = tensor_induce(A, R)
    uc = unit_counit(A, ind_a, R)
    ind_u = induce_morphism_tensor(uc.unit_tensor, R, source=ind_a)
    composite = uc.counit_tensor.compose(ind_u)
    return composite.var_images == tuple(ind_a.ring.gens())


def restricted_counit_after_unit(B: AlgebraAction, R: CrossSection) -> bool:
    """``res(c_B) ∘ u_{res B}`` is the identity of res B."""
    res_b = restrict_action(B, R.subgroup)
    ind = tensor_induce(res_b, R)
    u = AlgebraMorphism(res_b, restrict_action(ind, R.subgroup), tuple(ind.slot_embedding(0)))
    c = chi(AlgebraMorphism.identity(res_b), B, R, induced=ind)
    res_c = AlgebraMorphism(restrict_action(ind, R.subgroup), res_b, c.var_images)
    return res_c.compose(u).var_images == tuple(res_b.ring.gens())


def induced_counit_after_unit(A: AlgebraAction, R: CrossSection) -> bool:
    """``Ind^x(c_A) ∘ u_{Ind^x A}`` is the identity, tested on algebra generators."""
    T = product_induce(A, R)
    G = R.group
    proj = SlotProjection(T)
    for t in T.algebra_generators():
        # unit of T: tuple whose slot j is t r_j^-1, then project each slot
        unit_t = [T.act(t, G.inverse[r]) for r in R.reps]
        if tuple(proj(s) for s in unit_t) != t:
            return False
    return True


def counit_after_restricted_unit(B: AlgebraAction, R: CrossSection) -> bool:
    """``c_{res B} ∘ res(u_B)`` is the identity of res B."""
    res_b = restrict_action(B, R.subgroup)
    u = psi(AlgebraMorphism.identity(res_b), B, R)
    return tuple(t[0] for t in u.var_images) == tuple(res_b.ring.gens())


def triangle_identities(A: AlgebraAction, B: AlgebraAction, R: CrossSection) -> dict:
    return {
        "counit_after_induced_unit": counit_after_induced_unit(A, R),
        "restricted_counit_after_unit": restricted_counit_after_unit(B, R),
        "induced_counit_after_unit": induced_counit_after_unit(A, R),
        "counit_after_restricted_unit": counit_after_restricted_unit(B, R),
    }


def composite_f_trace_is_identity(B: AlgebraAction, R: CrossSection) -> bool:
    """F-trace of ``psi(id) ∘ chi(id)`` on res B is the identity."""
    res_b = restrict_action(B, R.subgroup)
    ident = AlgebraMorphism.identity(res_b)
    alpha = psi(ident, B, R).after(chi(ident, B, R))
    return f_trace(alpha, res_b, R).var_images == tuple(res_b.ring.gens())


# --- normalized cross-sections ---------------------------------------------

@dataclass
class SplittingReport:
    normalized: bool
    mu_equivariant: bool
    const_equivariant: bool

    @property
    def ok(self) -> bool:
        return self.normalized and self.mu_equivariant and self.const_equivariant

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"normalized": self.normalized, "mu_equivariant": self.mu_equivariant,
                "const_equivariant": self.const_equivariant, "ok": self.ok}


def check_normalized_splitting(A: AlgebraAction, R: CrossSection) -> SplittingReport:
    """Equivariance of the multiplication map Ind(A) -> A and the diagonal A -> Ind^x(A) over H."""
    H = R.subgroup
    ind = tensor_induce(A, R)
    n = A.nvars
    mu = AlgebraMorphism(restrict_action(ind, H), A,
                         tuple(A.ring.var(i % n) for i in range(ind.nvars)))
    T = product_induce(A, R)
    const = TupleMorphism(A, T, tuple(T.diagonal(v) for v in A.ring.gens()), subgroup=H)
    return SplittingReport(R.is_normalized_by_subgroup(), is_equivariant_morphism(mu), const.is_equivariant())


# --- induced points -----------------------------------------------------------

def induced_tensor_point(A: AlgebraAction, R: CrossSection, a: Polynomial):
    """``m^-1 * x_{0,a}`` in Ind(A) and its G-trace."""
    from .trace import trace_full

    ind = tensor_induce(A, R)
    m = R.index
    cand = ind.iota(0, a).scale(pow(m, -1, A.p))
    return ind, cand, trace_full(ind, cand)


def induced_product_point(A: AlgebraAction, R: CrossSection, a: Polynomial):
    """``m^-1 * (a, 1, ..., 1)`` in Ind^x(A) and its G-trace."""
    T = product_induce(A, R)
    m = R.index
    hat = T.tuple([a] + [A.ring.one()] * (m - 1))
    cand = T.scale(hat, pow(m, -1, A.p))
    return T, cand, T.trace(cand)
