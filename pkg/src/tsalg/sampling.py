"""Seeded samplers for points and equivariant morphisms.

Random points are built as ``base + sum (f - f h)``: the correction has
trace zero, so the trace of the base point is preserved.
"""

from __future__ import annotations

import random

from .actions import AlgebraAction, AlgebraMorphism, d_reg, point_morphism, restrict_action
from .groups import CrossSection, Subgroup
from .induction import TupleAlgebra, TupleMorphism, _local
from .poly import Polynomial, PolyRing


def random_poly(ring: PolyRing, max_degree: int, rng: random.Random, terms: int = 3) -> Polynomial:
    monos = ring.monomials_up_to(max_degree)
    picked = {}
    for _ in range(terms):
        picked[rng.choice(monos)] = rng.randrange(ring.p)
    return Polynomial(ring, picked)


def random_point(A: AlgebraAction, base: Polynomial, rng: random.Random, max_degree: int = 2,
                 corrections: int = 2) -> Polynomial:
    """A point of A with the same trace as ``base``."""
    out = base
    gens = A.group.generators
    if not gens:
        return out
    for _ in range(corrections):
        f = random_poly(A.ring, max_degree, rng)
        out = out + f - A.act(f, rng.choice(gens))
    return out


def random_tuple_point(T: TupleAlgebra, base: tuple, rng: random.Random, max_degree: int = 1) -> tuple:
    out = base
    ring = T.base.ring
    for _ in range(2):
        t = tuple(random_poly(ring, max_degree, rng, terms=2) for _ in range(T.components))
        g = rng.choice(T.group.generators)
        out = T.sub(T.add(out, t), T.act(t, g))
    return out


def morphism_from_point(B_restricted: AlgebraAction, point: Polynomial) -> AlgebraMorphism:
    """The morphism out of the dehomogenized regular algebra of H determined by an H-point."""
    return point_morphism(B_restricted, point)


def morphism_res_dreg_to(A: AlgebraAction, H: Subgroup, a_point: Polynomial, rng: random.Random,
                         D: AlgebraAction | None = None) -> AlgebraMorphism:
    """An H-morphism from the restricted dehomogenized regular G-algebra into A.

    ``X_{s h} -> c_s h`` for a transversal s of the left cosets sH, with the
    c_s chosen so that the images of all X_g sum to 1.
    """
    G = H.parent
    loc = _local(H)
    D = D or d_reg(G, A.field)
    res_d = restrict_action(D, H)
    reps = []
    covered = {}
    for s in range(G.order):
        if s not in covered:
            reps.append(s)
            for h in H.elements:
                covered[G.mult[s][h]] = (len(reps) - 1, h)
    chosen = [None] * len(reps)
    spill = A.ring.zero()
    for k in range(1, len(reps)):
        chosen[k] = random_poly(A.ring, 1, rng, terms=2)
        for g in range(A.group.order):
            spill = spill + A.act(chosen[k], g)
    chosen[0] = a_point * (A.ring.one() - spill)
    images = []
    for g in range(1, G.order):
        k, h = covered[g]
        images.append(A.act(chosen[k], loc[h]))
    return AlgebraMorphism(res_d, A, tuple(images))


def tuple_point_morphism(D: AlgebraAction, T: TupleAlgebra, point: tuple) -> TupleMorphism:
    """``y_g -> point g`` from the dehomogenized regular G-algebra into a tuple algebra."""
    total = T.trace(point)
    if not T.is_one(total):
        raise ValueError("tuple is not a point")
    return TupleMorphism(D, T, tuple(T.act(point, g) for g in range(1, T.group.order)))


def section_points(T: TupleAlgebra, a: Polynomial) -> tuple:
    """``a`` in slot 0 and zero elsewhere: a G-point whenever a is an H-point."""
    return T.unit_vector(0, a)


__all__ = [
    "random_poly", "random_point", "random_tuple_point", "morphism_from_point", "morphism_res_dreg_to",
    "tuple_point_morphism", "section_points", "CrossSection",
]
