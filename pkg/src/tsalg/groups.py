"""Finite groups as multiplication tables, with subgroups and coset data.

Conventions: ``mult[g][h]`` is the product ``gh``; permutations act on
the right, so the product of image arrays is ``(gh)[i] = h[g[i]]``.
Elements are numbered in breadth-first discovery order from the
generators, with the identity at index 0.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

DEFAULT_ORDER_CAP = 64


class GroupError(ValueError):
    pass


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


class GroupTable:
    """A finite group given by its multiplication table.

    ``generators`` are element indices; ``gen_words[g]`` is a word in
    generator positions (indices into ``generators``) evaluating to g.
    ``perms`` holds the permutation of each element when the group was
    built from permutations, and ``embedding`` the parent indices when
    this table was cut out of a larger group.
    """

    def __init__(self, mult, generators: Sequence[int], gen_words=None, perms=None,
                 embedding=None, parent=None):
        self.mult = tuple(tuple(row) for row in mult)
        self.order = len(self.mult)
        self.generators = tuple(generators)
        self.perms = None if perms is None else tuple(tuple(x) for x in perms)
        self.embedding = None if embedding is None else tuple(embedding)
        self.parent = parent
        inverse = [None] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.mult[g][h] == 0:
                    inverse[g] = h
                    break
        self.inverse = tuple(inverse)
        self.gen_words = tuple(tuple(w) for w in gen_words) if gen_words is not None else self._bfs_words()

    def _bfs_words(self):
        words = {0: ()}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for k, s in enumerate(self.generators):
                h = self.mult[g][s]
                if h not in words:
                    words[h] = words[g] + (k,)
                    queue.append(h)
        if len(words) != self.order:
            raise GroupError("declared generators do not generate the group")
        return [words[g] for g in range(self.order)]

    def __eq__(self, other):
        return (isinstance(other, GroupTable) and self.mult == other.mult
                and self.generators == other.generators and self.embedding == other.embedding)

    def __hash__(self):
        return hash((self.mult, self.generators, self.embedding))

    def __repr__(self):
        return f"GroupTable(order={self.order}, generators={list(self.generators)})"

    def mul(self, g: int, h: int) -> int:
        return self.mult[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def conj(self, g: int, x: int) -> int:
        """``x^g = g^-1 x g``."""
        return self.mult[self.mult[self.inverse[g]][x]][g]

    def power(self, g: int, e: int) -> int:
        result = 0
        for _ in range(e):
            result = self.mult[result][g]
        return result

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mult[x][g]
            k += 1
        return k

    def evaluate_word(self, word: Sequence[int]) -> int:
        x = 0
        for k in word:
            x = self.mult[x][self.generators[k]]
        return x

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(g) for g in range(self.order))

    def closure(self, elements: Sequence[int]) -> tuple[int, ...]:
        """Sorted element list of the subgroup generated by ``elements``."""
        seen = {0}
        queue = deque([0])
        gens = [g for g in elements if g != 0]
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.mult[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [0])

    def subgroup(self, elements: Sequence[int]) -> "Subgroup":
        return Subgroup(self, elements)

    def validate(self, associativity: str = "auto") -> None:
        n = self.order
        if n == 0:
            raise GroupError("empty table")
        for g in range(n):
            row = self.mult[g]
            if len(row) != n or sorted(row) != list(range(n)):
                raise GroupError(f"row {g} is not a permutation of the elements")
            if any(not 0 <= x < n for x in row):
                raise GroupError("table entry out of range")
        for g in range(n):
            if self.mult[0][g] != g or self.mult[g][0] != g:
                raise GroupError("element 0 is not the identity")
            if self.inverse[g] is None or self.mult[self.inverse[g]][g] != 0:
                raise GroupError(f"element {g} has no two-sided inverse")
        if associativity == "auto":
            associativity = "all" if n <= 24 else "sample"
        if associativity == "all":
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        elif associativity == "sample":
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(20000))
        else:
            triples = ()
        M = self.mult
        for a, b, c in triples:
            if M[M[a][b]][c] != M[a][M[b][c]]:
                raise GroupError(f"associativity fails at ({a}, {b}, {c})")


def build_group(generators: Sequence[Sequence[int]] | None = None, table=None,
                degree: int | None = None, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Close permutation generators (image arrays) or validate an explicit table."""
    if table is not None:
        return _group_from_table(table, cap)
    generators = [tuple(int(x) for x in g) for g in (generators or [])]
    if generators:
        n = len(generators[0])
    elif degree is not None:
        n = degree
    else:
        n = 1
    for k, g in enumerate(generators):
        if len(g) != n:
            raise GroupError(f"generator {k} acts on {len(g)} points, expected {n}")
        if sorted(g) != list(range(n)):
            raise GroupError(f"generator {k} is not a bijection of {{0..{n - 1}}}")
    identity = tuple(range(n))
    index = {identity: 0}
    perms = [identity]
    words = [()]
    gen_idx = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        px = perms[x]
        for k, s in enumerate(generators):
            y = tuple(s[px[i]] for i in range(n))
            if y not in index:
                if len(perms) >= cap:
                    raise GroupError(f"group order exceeds cap {cap}")
                index[y] = len(perms)
                perms.append(y)
                words.append(words[x] + (k,))
                queue.append(index[y])
    gen_idx = [index[s] for s in generators]
    mult = [[index[tuple(h[g[i]] for i in range(n))] for h in perms] for g in perms]
    G = GroupTable(mult, gen_idx, gen_words=words, perms=perms)
    G.validate(associativity="none")
    return G


def _group_from_table(table, cap: int) -> GroupTable:
    table = [list(map(int, row)) for row in table]
    n = len(table)
    if n > cap:
        raise GroupError(f"group order exceeds cap {cap}")
    provisional = GroupTable(table, [], gen_words=[()] * n)
    provisional.validate()
    gens: list[int] = []
    span = {0}
    for g in range(n):
        if g not in span:
            gens.append(g)
            span = set(provisional.closure(gens))
    G = GroupTable(table, gens)
    return G


class Subgroup:
    """A subgroup of a :class:`GroupTable`, closure checked exhaustively."""

    def __init__(self, parent: GroupTable, elements: Sequence[int]):
        self.parent = parent
        els = tuple(sorted(set(int(x) for x in elements)))
        if not els or els[0] != 0:
            raise GroupError("subgroup must contain the identity")
        S = set(els)
        if any(not 0 <= x < parent.order for x in els):
            raise GroupError("subgroup element out of range")
        for a in els:
            if parent.inverse[a] not in S:
                raise GroupError(f"subgroup not closed under inverses (element {a})")
            for b in els:
                if parent.mult[a][b] not in S:
                    raise GroupError(f"subgroup not closed under products ({a}*{b})")
        self.elements = els
        self._set = S

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g):
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent == self.parent and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Subgroup({list(self.elements)})"

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating set: scan elements in index order."""
        gens: list[int] = []
        span = {0}
        for g in self.elements:
            if g not in span:
                gens.append(g)
                span = set(self.parent.closure(gens))
        return tuple(gens)

    def local_index(self, g: int) -> int:
        return self.as_group().embedding.index(g)

    def as_group(self) -> GroupTable:
        """This subgroup as a group in its own right, elements in sorted parent order."""
        return self._as_group

    @cached_property
    def _as_group(self) -> GroupTable:
        pos = {g: i for i, g in enumerate(self.elements)}
        M = self.parent.mult
        mult = [[pos[M[a][b]] for b in self.elements] for a in self.elements]
        gens = [pos[g] for g in self.generators]
        perms = None
        if self.parent.perms is not None:
            perms = [self.parent.perms[g] for g in self.elements]
        return GroupTable(mult, gens, perms=perms, embedding=self.elements, parent=self.parent)

    def is_normal(self) -> bool:
        return all(self.parent.conj(g, h) in self._set for g in range(self.parent.order) for h in self.elements)

    def conjugate(self, g: int) -> "Subgroup":
        return Subgroup(self.parent, [self.parent.conj(g, h) for h in self.elements])

    def right_coset(self, r: int) -> tuple[int, ...]:
        return tuple(sorted(self.parent.mult[h][r] for h in self.elements))


@dataclass(frozen=True)
class CrossSection:
    """Representatives of the right cosets ``H r`` of ``subgroup`` inside ``within``.

    ``coset_of[x] = (h, j)`` with ``x = h * reps[j]``.
    """

    subgroup: Subgroup
    reps: tuple[int, ...]
    within: tuple[int, ...] = field(default=())

    def __post_init__(self):
        H = self.subgroup
        G = H.parent
        within = self.within or tuple(range(G.order))
        object.__setattr__(self, "within", tuple(within))
        if not self.reps or self.reps[0] != 0:
            raise GroupError("cross-section must start with the identity")
        covered = {}
        for j, r in enumerate(self.reps):
            for h in H.elements:
                x = G.mult[h][r]
                if x in covered:
                    raise GroupError(f"representatives {self.reps[covered[x][1]]} and {r} share a coset")
                covered[x] = (h, j)
        if set(covered) != set(within):
            raise GroupError("representatives do not cover the group")
        object.__setattr__(self, "_coset_of", covered)

    @property
    def index(self) -> int:
        return len(self.reps)

    @property
    def group(self) -> GroupTable:
        return self.subgroup.parent

    def coset_of(self, x: int) -> tuple[int, int]:
        return self._coset_of[x]

    def is_normalized_by_subgroup(self) -> bool:
        G = self.group
        R = set(self.reps)
        return all({G.conj(h, r) for r in self.reps} == R for h in self.subgroup.elements)


def cross_section(H: Subgroup, within: Subgroup | None = None) -> CrossSection:
    """Greedy right-coset representatives: take r iff H r is not yet covered."""
    G = H.parent
    scan = within.elements if within is not None else range(G.order)
    covered: set[int] = set()
    reps = []
    for r in scan:
        if r not in covered:
            reps.append(r)
            covered.update(G.mult[h][r] for h in H.elements)
    return CrossSection(H, tuple(reps), tuple(scan))


def coset_data(R: CrossSection, r: int, g: int) -> tuple[int, int]:
    """For rep index r and element g return (h, j) with ``reps[r] * g = h * reps[j]``."""
    if not 0 <= r < len(R.reps):
        raise GroupError(f"{r} is not a representative index")
    G = R.group
    return R.coset_of(G.mult[R.reps[r]][g])


def sylow_subgroup(G: GroupTable, p: int) -> Subgroup:
    """A Sylow p-subgroup grown greedily from p-elements in index order."""
    target = _p_part(G.order, p)
    if target == 1:
        return G.trivial()
    p_elements = [g for g in range(1, G.order) if _p_part(G.element_orders[g], p) == G.element_orders[g]]
    current: tuple[int, ...] = (0,)
    while len(current) < target:
        grown = False
        cur_set = set(current)
        for x in p_elements:
            if x in cur_set:
                continue
            cand = G.closure(list(current) + [x])
            if _p_part(len(cand), p) == len(cand):
                current = cand
                grown = True
                break
        if not grown:  # cannot happen in a finite group (normalizers grow)
            raise GroupError("Sylow search stalled")
    return Subgroup(G, current)


def p_core(G: GroupTable, p: int) -> Subgroup:
    """Intersection of all conjugates of one Sylow p-subgroup."""
    P = sylow_subgroup(G, p)
    core = set(P.elements)
    for g in range(G.order):
        core &= set(P.conjugate(g).elements)
    return Subgroup(G, core)


def cyclic_group(n: int) -> GroupTable:
    return build_group([[(i + 1) % n for i in range(n)]] if n > 1 else [], degree=n)


def symmetric_group_s3() -> GroupTable:
    """S3 on {0,1,2} from the transposition (01) and the 3-cycle (012)."""
    return build_group([[1, 0, 2], [1, 2, 0]])
