"""Sparse multivariate polynomials over F_p in canonical form.

A monomial is a tuple of exponents, one slot per declared variable; a
polynomial maps monomials to nonzero coefficients in ``[0, p)``.
Serialization orders terms by graded lex (higher total degree first,
ties broken lexicographically in declared variable order), so two
polynomials are equal iff their serializations are byte-equal.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from operator import add
from typing import Iterable, Mapping, Sequence

from .fields import ExtField, PrimeField

VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class PolyRing:
    """F_p[vars]. Cheap value object; equal rings have equal ``p`` and ``vars``."""

    __slots__ = ("field", "p", "vars", "nvars", "_index", "_zero_mono")

    def __init__(self, field: PrimeField | int, vars: Sequence[str]):
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        self.field = field
        self.p = field.p
        self.vars = tuple(vars)
        for v in self.vars:
            if not VAR_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.vars)
        self._index = {v: i for i, v in enumerate(self.vars)}
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.p == other.p and self.vars == other.vars

    def __hash__(self):
        return hash((self.p, self.vars))

    def __repr__(self):
        return f"PolyRing(p={self.p}, vars={list(self.vars)})"

    def index(self, name: str) -> int:
        return self._index[name]

    @property
    def one_monomial(self) -> tuple[int, ...]:
        return self._zero_mono

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {self._zero_mono: c})

    def var(self, v: int | str) -> "Polynomial":
        i = self._index[v] if isinstance(v, str) else v
        mono = [0] * self.nvars
        mono[i] = 1
        return Polynomial(self, {tuple(mono): 1}, _clean=True)

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self.vars, self.field)

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All monomials of total degree d, in canonical (descending grlex) order."""
        n = self.nvars
        if d < 0:
            return []
        if n == 0:
            return [()] if d == 0 else []
        out = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(reverse=True)
        return out

    def monomials_up_to(self, d: int, ascending: bool = False) -> list[tuple[int, ...]]:
        """Monomials of degree <= d; descending grlex unless ``ascending``."""
        out = []
        for k in range(d, -1, -1):
            out.extend(self.monomials_of_degree(k))
        if ascending:
            out.reverse()
        return out


def grlex_key(mono: tuple[int, ...]):
    return (sum(mono), mono)


class Polynomial:
    """Immutable polynomial; arithmetic requires both operands in the same ring."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], int], _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            p = ring.p
            clean = {}
            for m, c in terms.items():
                c %= p
                if c:
                    if len(m) != ring.nvars:
                        raise ValueError("monomial length does not match the ring")
                    clean[tuple(m)] = c
            self.terms = clean
        self._hash = None

    # -- basic protocol ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        return serialize(self)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(self.ring.one_monomial, 0)

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or d in degs)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def variables_used(self) -> set[int]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: int) -> "Polynomial":
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul_terms(self.ring, self.terms, other.terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def graded_component(self, d: int) -> "Polynomial":
        return graded_component(self, d)


def _mul_terms(ring: PolyRing, a: dict, b: dict) -> Polynomial:
    if not a or not b:
        return Polynomial(ring, {}, _clean=True)
    if len(a) < len(b):
        a, b = b, a
    p = ring.p
    out: dict = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = tuple(map(add, ma, mb))
            out[m] = (get(m, 0) + ca * cb) % p
    return Polynomial(ring, {m: c for m, c in out.items() if c}, _clean=True)


# --- serialization and parsing -------------------------------------------

def _format_term(ring: PolyRing, mono: tuple[int, ...], c: int) -> str:
    factors = []
    for name, e in zip(ring.vars, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    return body if c == 1 else f"{c}*{body}"


def serialize(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    return " + ".join(_format_term(f.ring, m, c) for m, c in f.sorted_terms())


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace
            break
        if m.lastindex is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek()[:2] == ("op", "+"):
            self.take()
        total = self.term().scale(sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[:2] == ("op", "-"):
                self.error("negative exponent")
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer")
            self.take()
            base = base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.ring.const(val)
        if kind == "var":
            try:
                return self.ring.var(self.ring.index(val))
            except KeyError:
                raise ParseError(f"undeclared variable {val!r}", pos, self.text) from None
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return inner
        if kind == "end":
            raise ParseError("unexpected end of expression", pos, self.text)
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse_poly(text: str, vars: Sequence[str], field: PrimeField | int) -> Polynomial:
    """Parse ``text`` into a canonical polynomial over F_p[vars].

    Accepts sums/differences of products of integer literals, variables
    and parenthesized subexpressions, each optionally raised to a
    nonnegative integer power.
    """
    ring = vars if isinstance(vars, PolyRing) else PolyRing(field, vars)
    return _Parser(text, ring).parse()


# --- algebra homomorphisms and gradings -----------------------------------

def substitute(f: Polynomial, images: Mapping[int, Polynomial] | Sequence[Polynomial],
               target: PolyRing | None = None) -> Polynomial:
    """Apply the algebra homomorphism sending variable i to ``images[i]``."""
    if isinstance(images, Mapping):
        lookup = images
    else:
        lookup = dict(enumerate(images))
    if target is None:
        for img in lookup.values():
            target = img.ring
            break
        else:
            if f.is_constant():
                target = f.ring
            else:
                raise KeyError("no image supplied for an occurring variable")
    p = target.p
    if p != f.ring.p:
        raise ValueError("characteristic mismatch in substitution")
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        got = powers.get(key)
        if got is None:
            try:
                img = lookup[i]
            except KeyError:
                raise KeyError(f"missing image for variable {f.ring.vars[i]!r}") from None
            if img.ring != target:
                raise ValueError("images must share one target ring")
            if e == 1:
                got = img
            else:
                half = power(i, e // 2)
                got = half * half
                if e % 2:
                    got = got * img
            powers[key] = got
        return got

    acc: dict = {}
    get = acc.get
    zero = target.one_monomial
    for mono, c in f.terms.items():
        term_terms = {zero: c}
        for i, e in enumerate(mono):
            if e:
                term_terms = _mul_terms(target, term_terms, power(i, e).terms).terms
                if not term_terms:
                    break
        for m, v in term_terms.items():
            acc[m] = (get(m, 0) + v) % p
    return Polynomial(target, {m: v for m, v in acc.items() if v}, _clean=True)


def graded_component(f: Polynomial, d: int) -> Polynomial:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if sum(m) == d}, _clean=True)


def evaluate_point(f: Polynomial, point: Sequence[int], field: ExtField) -> int:
    """Evaluate f at a point of F_{p^k}^n (elements in the integer encoding of ``field``)."""
    if len(point) != f.ring.nvars:
        raise ValueError(f"point has {len(point)} coordinates, ring has {f.ring.nvars} variables")
    if field.p != f.ring.p:
        raise ValueError(f"characteristic mismatch: field has p={field.p}, polynomial p={f.ring.p}")
    total = 0
    for mono, c in f.terms.items():
        val = field.embed(c)
        for x, e in zip(point, mono):
            if e:
                val = field.mul(val, field.pow(x, e))
                if val == 0:
                    break
        total = field.add(total, val)
    return total


def coefficient_vector(f: Polynomial, index: Mapping[tuple[int, ...], int], length: int) -> list[int]:
    """Coordinates of f on a monomial basis; raises KeyError if f leaves the basis."""
    vec = [0] * length
    for m, c in f.terms.items():
        vec[index[m]] = c
    return vec


def from_vector(ring: PolyRing, basis: Sequence[tuple[int, ...]], vec: Iterable[int]) -> Polynomial:
    return Polynomial(ring, {m: int(c) for m, c in zip(basis, vec) if int(c) % ring.p})
