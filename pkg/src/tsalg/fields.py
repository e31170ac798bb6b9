"""Prime fields and small extension fields used for point evaluation.

Coefficients of every polynomial live in a prime field; extension fields
only appear when polynomials are evaluated at points over F_{p^k}.
Extension field elements are encoded as integers in ``[0, p**k)``: the
base-p digits (least significant first) are the coefficients of the
residue class polynomial.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

MAX_PRIME = 2**63


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """The field F_p. Elements are plain ints in ``[0, p)``."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} exceeds the 64-bit limit")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __call__(self, a: int) -> int:
        return int(a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a prime field")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


# --- univariate helpers over F_p (coefficient lists, low to high) ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _upoly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _upoly_mod(out, m, p)


def _upoly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _upoly_mod(a, b, p)
    return a


def _upoly_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _upoly_mod(base, m, p)
    while e:
        if e & 1:
            result = _upoly_mulmod(result, base, m, p)
        base = _upoly_mulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Ben-Or test: f of degree k is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= k/2."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p == 0:
        return False
    if k == 1:
        return True
    xp = [0, 1]
    for _ in range(1, k // 2 + 1):
        xp = _upoly_powmod(xp, p, modulus, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_upoly_gcd(modulus, _trim(diff), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k, scanning low-to-high coefficients as a base-p integer."""
    for n in range(p**k):
        coeffs = []
        for _ in range(k):
            coeffs.append(n % p)
            n //= p
        cand = coeffs + [1]
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


class ExtField:
    """F_{p^k} = F_p[t]/(modulus).

    Multiplication goes through discrete log tables, which are built on
    first use; the Zech logarithm table used by the compiled kernels is
    exposed as :attr:`zech`.
    """

    TABLE_CAP = 2**20

    def __init__(self, p: int, k: int = 1, modulus: list[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        if self.q > self.TABLE_CAP:
            raise ValueError(f"field of order {self.q} exceeds table cap {self.TABLE_CAP}")

    def __repr__(self):
        return f"ExtField(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash(("ExtField", self.p, self.modulus))

    # encoding
    def to_vector(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_vector(self, v) -> int:
        if len(v) > self.k:
            raise ValueError("vector longer than the extension degree")
        n = 0
        for c in reversed(list(v)):
            n = n * self.p + (int(c) % self.p)
        return n

    def embed(self, c: int) -> int:
        """Image of a prime field element."""
        return int(c) % self.p

    def elements(self) -> range:
        return range(self.q)

    # arithmetic
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        va, vb = self.to_vector(a), self.to_vector(b)
        return self.from_vector([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_vector([(-x) % self.p for x in self.to_vector(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _upoly_mulmod(_trim(list(self.to_vector(a))), _trim(list(self.to_vector(b))),
                             list(self.modulus), self.p)
        return self.from_vector(prod)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        log, exp = self.log, self.exp
        return int(exp[(log[a] + log[b]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.k == 1:
            return pow(a, -1, self.p)
        return int(self.exp[(-int(self.log[a])) % (self.q - 1)])

    @cached_property
    def primitive_element(self) -> int:
        n = self.q - 1
        factors = prime_factors(n)
        for g in range(2 if self.q > 2 else 1, self.q):
            if all(self._slow_pow(g, n // r) != 1 for r in factors):
                return g
        return 1  # q == 2

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.q - 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        g = self.primitive_element
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g) if self.k > 1 else x * g % self.p
        return exp, log

    @property
    def exp(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log(self) -> np.ndarray:
        return self._tables[1]

    @cached_property
    def zech(self) -> np.ndarray:
        """Zech logarithms: ``g**zech[i] = 1 + g**i``; ``-1`` marks ``1 + g**i = 0``."""
        n = self.q - 1
        z = np.empty(n, dtype=np.int64)
        for i in range(n):
            s = self.add(1, int(self.exp[i]))
            z[i] = -1 if s == 0 else self.log[s]
        return z

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        return "[" + ",".join(str(c) for c in self.to_vector(a)) + "]"
