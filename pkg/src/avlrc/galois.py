"""Finite fields GF(p^n) and the tower GF(p^s) = F_q inside GF(p^ell) = F_Q.

Elements are plain integers: the base-p digits of an integer are the
coefficients (constant term first) of a polynomial reduced modulo the field's
fixed irreducible modulus.  All arithmetic is table driven and accepts numpy
arrays as well as Python ints.

The modulus for each (p, n) is the monic irreducible polynomial of minimal
weight (number of nonzero coefficients); ties are broken by the smallest
integer encoding.  The distinguished primitive element is the smallest
integer whose multiplicative order is p^n - 1.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Literal

import numpy as np

MAX_ORDER = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists with the constant term first --

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(_trim(a)) > dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _poly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, m, p)


def _poly_powmod(a, e, m, p):
    result, base = [1], _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _trim(_poly_mod(a, b, p))
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = _trim(list(coeffs))
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _trim(_poly_mod([(a - b) % p for a, b in itertools.zip_longest(
            _poly_powmod(x, p**n, m, p), x, fillvalue=0)], m, p)):
        return False
    for r in prime_factors(n):
        h = _poly_powmod(x, p ** (n // r), m, p)
        diff = [(a - b) % p for a, b in itertools.zip_longest(h, x, fillvalue=0)]
        if len(_poly_gcd(m, diff, p)) != 1:
            return False
    return True


def find_modulus(p: int, n: int) -> tuple[int, ...]:
    """Minimal-weight, then smallest-encoding, monic irreducible of degree n."""
    if n == 1:
        return (0, 1)
    for weight in range(2, n + 2):
        candidates = []
        # constant term must be nonzero, leading coefficient is 1
        for inner in itertools.combinations(range(1, n), weight - 2):
            for values in itertools.product(range(1, p), repeat=weight - 1):
                coeffs = [0] * (n + 1)
                coeffs[n] = 1
                coeffs[0] = values[0]
                for pos, v in zip(inner, values[1:]):
                    coeffs[pos] = v
                candidates.append(coeffs)
        candidates.sort(key=lambda c: sum(ci * p**i for i, ci in enumerate(c)))
        for c in candidates:
            if is_irreducible(c, p):
                return tuple(c)
    raise ValueError(f"no irreducible polynomial of degree {n} over GF({p})")


class GF:
    """The field GF(p^n) with log/antilog tables.

    Use :func:`field` to get cached instances; two fields compare equal
    exactly when they are the same object.
    """

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("degree must be positive")
        order = p**n
        if order > MAX_ORDER:
            raise ValueError(f"GF({p}^{n}) exceeds the supported size {MAX_ORDER}")
        self.p, self.degree, self.order = p, n, order
        self.modulus = find_modulus(p, n)
        self._place = p ** np.arange(n, dtype=np.int64)
        self.generator = self._smallest_generator()
        self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"

    # -- digit representation --
    def to_digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._place) % self.p

    def from_digits(self, d) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) * self._place).sum(axis=-1)

    def _poly(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.degree)]

    def _int(self, coeffs) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def _slow_mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return a * b % self.p
        return self._int(_poly_mulmod(self._poly(a), self._poly(b), list(self.modulus), self.p))

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def _smallest_generator(self) -> int:
        group = self.order - 1
        exps = [group // r for r in prime_factors(group)]
        for g in range(1, self.order):
            if all(self._slow_pow(g, e) != 1 for e in exps):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _mul_matrix(self, a: int) -> np.ndarray:
        # row i holds the digits of a * x^i, so digits(a*y) = digits(y) @ M
        rows = [self._poly(self._slow_mul(a, self.p**i)) for i in range(self.degree)]
        return np.array(rows, dtype=np.int64)

    def _build_tables(self):
        q1 = self.order - 1
        exp = np.zeros(1, dtype=np.int64)
        exp[0] = 1
        # doubling: exp[B:2B] = exp[0:B] * g^B, done as a linear map on digits
        while len(exp) < q1:
            b = len(exp)
            step = self._mul_matrix(self._slow_pow(self.generator, b))
            block = (self.to_digits(exp) @ step) % self.p
            exp = np.concatenate([exp, self.from_digits(block)])
        exp = exp[:q1]
        log = np.full(self.order, 2 * q1, dtype=np.int64)
        log[exp] = np.arange(q1)
        if len(np.unique(exp)) != q1:
            raise AssertionError("generator does not span the multiplicative group")
        # zero has log 2*q1; every sum touching it lands in the zero tail
        self.exp = np.concatenate([exp, exp, np.zeros(2 * q1 + 1, dtype=np.int64)])
        self.log = log
        if self.p == 2:
            self._add_table = None
        elif self.order <= 1024:
            d = self.to_digits(np.arange(self.order))
            s = (d[:, None, :] + d[None, :, :]) % self.p
            self._add_table = self.from_digits(s)
        else:
            self._add_table = None
        self._neg = self.from_digits((-self.to_digits(np.arange(self.order))) % self.p)
        self.mul_table = (self.mul(np.arange(self.order)[:, None], np.arange(self.order)[None, :])
                          if self.order <= 1024 else None)

    # -- arithmetic, elementwise over ints or arrays --
    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add_table is not None:
            return self._add_table[a, b]
        return self.from_digits((self.to_digits(a) + self.to_digits(b)) % self.p)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        arr = np.asarray(a, dtype=np.int64)
        if e == 0:
            out = np.ones_like(arr)
        else:
            out = np.where(arr == 0, 0, self.exp[(self.log[arr] * e) % (self.order - 1)])
        return int(out) if out.ndim == 0 else out

    def power_of_generator(self, e: int) -> int:
        return int(self.exp[e % (self.order - 1)])

    def discrete_log(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no discrete logarithm")
        return int(self.log[a])

    def scalar(self, c: int) -> int:
        """The image of the integer c under Z -> GF(p) -> this field."""
        return c % self.p

    def mult_order(self, a: int) -> int:
        q1 = self.order - 1
        return q1 // np.gcd(q1, self.discrete_log(a))

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def random(self, rng: np.random.Generator, size=None, nonzero=False):
        low = 1 if nonzero else 0
        return rng.integers(low, self.order, size=size)

    def dot(self, a, b):
        """Field dot product along the last axis."""
        prod = self.mul(a, b)
        return self.sum(prod, axis=-1)

    def sum(self, a, axis=-1):
        a = np.moveaxis(np.asarray(a), axis, 0)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=0) if len(a) else np.zeros(a.shape[1:], dtype=np.int64)
        if len(a) == 0:
            return np.zeros(a.shape[1:], dtype=np.int64)
        acc = a[0]
        for row in a[1:]:
            acc = self.add(acc, row)
        return acc


@functools.lru_cache(maxsize=None)
def field(p: int, n: int) -> GF:
    return GF(p, n)


@dataclass(frozen=True)
class Felt:
    """A scalar tagged with the tower level it lives in ("q" or "Q")."""

    value: int
    level: Literal["q", "Q"]


@dataclass(frozen=True, eq=False)
class FieldTower:
    """F_q = GF(p^s) embedded in F_Q = GF(p^ell)."""

    small: GF
    big: GF
    embed_table: np.ndarray = dc_field(repr=False)
    restrict_table: np.ndarray = dc_field(repr=False)

    @property
    def p(self) -> int:
        return self.small.p

    @property
    def s(self) -> int:
        return self.small.degree

    @property
    def ell(self) -> int:
        return self.big.degree

    @property
    def q(self) -> int:
        return self.small.order

    @property
    def Q(self) -> int:
        return self.big.order

    @property
    def extension_degree(self) -> int:
        return self.ell // self.s

    @property
    def eta(self) -> int:
        """The q-level primitive element, embedded in F_Q."""
        return int(self.embed_table[self.small.generator])

    @property
    def alpha(self) -> int:
        return self.big.generator

    def embed(self, a):
        return self.embed_table[a]

    def restrict(self, b):
        out = self.restrict_table[b]
        if np.any(np.asarray(out) < 0):
            raise ValueError("element is not in the subfield F_q")
        return out

    def in_subfield(self, b):
        return self.restrict_table[b] >= 0

    def trace(self, x, i: int | None = None):
        """x + x^q + ... + x^(q^(i-1)) elementwise in F_Q (default i = ell/s)."""
        if i is None:
            i = self.extension_degree
        if i < 1:
            raise ValueError("trace length must be at least 1")
        x = np.asarray(x, dtype=np.int64)
        acc, term = x, x
        for _ in range(i - 1):
            term = self.big.pow(term, self.q)
            acc = self.big.add(acc, term)
        return acc


def _find_embedding(small: GF, big: GF) -> np.ndarray:
    q, Q = small.order, big.order
    if small.degree == 1:
        return np.arange(q, dtype=np.int64)
    # a root of the small modulus inside the order-(q-1) subgroup of F_Q
    step = (Q - 1) // (q - 1)
    mod = small.modulus
    for e in range(1, q):
        beta = big.power_of_generator(step * e)
        acc = 0
        for c in reversed(mod):
            acc = int(big.add(big.mul(acc, beta), c))
        if acc == 0:
            powers = [1]
            for _ in range(small.degree - 1):
                powers.append(int(big.mul(powers[-1], beta)))
            digits = small.to_digits(np.arange(q))
            table = np.zeros(q, dtype=np.int64)
            for i, b in enumerate(powers):
                scaled = big.mul(digits[:, i], b)
                table = big.add(table, scaled)
            return table
    raise AssertionError("small modulus has no root in the big field")


def make_tower(p: int, s: int, ell: int) -> FieldTower:
    """Build F_q = GF(p^s) inside F_Q = GF(p^ell) with a verified embedding."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 1 or ell < 1 or ell % s:
        raise ValueError(f"subfield degree s={s} must divide ell={ell}")
    small, big = field(p, s), field(p, ell)
    table = _find_embedding(small, big)
    a = small.elements()
    ea = table[a]
    if len(np.unique(ea)) != small.order:
        raise AssertionError("embedding is not injective")
    if not (np.array_equal(table[small.add(a[:, None], a[None, :])], big.add(ea[:, None], ea[None, :]))
            and np.array_equal(table[small.mul(a[:, None], a[None, :])], big.mul(ea[:, None], ea[None, :]))):
        raise AssertionError("embedding is not a field homomorphism")
    restrict = np.full(big.order, -1, dtype=np.int64)
    restrict[table] = a
    return FieldTower(small, big, table, restrict)


def primitive_element(tower: FieldTower, level: Literal["q", "Q"]) -> Felt:
    gf = tower.small if level == "q" else tower.big
    return Felt(gf.generator, level)


def relative_trace(tower: FieldTower, x: Felt, i: int) -> Felt:
    if x.level != "Q":
        raise ValueError("relative trace takes an F_Q element")
    if i < 1:
        raise ValueError("trace length must be at least 1")
    return Felt(int(tower.trace(x.value, i)), "Q")
