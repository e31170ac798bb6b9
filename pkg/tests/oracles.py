"""Independent reference implementations used only by the tests.

Nothing here imports the package's linear algebra or polynomial code, so
agreement with these oracles is evidence rather than a tautology.
"""

from __future__ import annotations

import itertools
from math import comb


def gf2_rank(rows: list[int]) -> int:
    """Rank over F_2 of rows given as integer bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Plain-list Gaussian elimination over F_p."""
    M = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


# --- dict polynomials: {exponent tuple: coeff} --------------------------------------

def dpoly_mul(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = (out.get(m, 0) + ca * cb) % p
    return {m: c for m, c in out.items() if c}


def dpoly_add(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for m, c in b.items():
        out[m] = (out.get(m, 0) + c) % p
    return {m: c for m, c in out.items() if c}


def dpoly_pow(a: dict, e: int, n: int, p: int) -> dict:
    out = {(0,) * n: 1}
    for _ in range(e):
        out = dpoly_mul(out, a, p)
    return out


def dpoly_subst(f: dict, images: list[dict], n: int, p: int) -> dict:
    out: dict = {}
    for m, c in f.items():
        term = {(0,) * n: c}
        for i, e in enumerate(m):
            term = dpoly_mul(term, dpoly_pow(images[i], e, n, p), p)
        out = dpoly_add(out, term, p)
    return out


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def c4_images() -> list[dict]:
    """x1 -> x1, x2 -> x2 + x1, x3 -> x3 + x2 over F_2, as dict polynomials."""
    return [{(1, 0, 0): 1}, {(0, 1, 0): 1, (1, 0, 0): 1}, {(0, 0, 1): 1, (0, 1, 0): 1}]


def c4_invariant_dim(d: int) -> int:
    """Dimension of the degree-d invariants of the C4 example by a bitmask kernel computation."""
    monos = monomials_of_degree(3, d)
    index = {m: i for i, m in enumerate(monos)}
    images = c4_images()
    # column j of (g - 1) as bitmask over monomials; invariants = kernel
    cols = []
    for m in monos:
        img = dpoly_subst({m: 1}, images, 3, 2)
        img = dpoly_add(img, {m: 1}, 2)
        mask = 0
        for mm in img:
            mask |= 1 << index[mm]
        cols.append(mask)
    return len(monos) - gf2_rank(cols)


def c4_invariant_count_brute(d: int) -> int:
    """Count invariant polynomials of degree d by enumerating the whole slice (small d only)."""
    monos = monomials_of_degree(3, d)
    images = c4_images()
    moved = [dpoly_subst({m: 1}, images, 3, 2) for m in monos]
    count = 0
    for bits in itertools.product((0, 1), repeat=len(monos)):
        f: dict = {}
        g: dict = {}
        for b, m, img in zip(bits, monos, moved):
            if b:
                f = dpoly_add(f, {m: 1}, 2)
                g = dpoly_add(g, img, 2)
        if f == g:
            count += 1
    return count


def slice_size(n: int, d: int) -> int:
    return comb(n + d - 1, d)


# --- permutations ------------------------------------------------------------------

def perm_closure(gens: list[tuple]) -> set[tuple]:
    n = len(gens[0]) if gens else 1
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
