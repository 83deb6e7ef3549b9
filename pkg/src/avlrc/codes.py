"""Linear codes given by a generator matrix over a finite field."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from . import linalg
from .galois import GF


class LinearCode:
    """A linear [n, k] code over ``field``.

    The generator is stored in reduced row echelon form, so two codes are
    equal (``==``) exactly when they have the same row space.
    """

    def __init__(self, field: GF, generators, n: int | None = None):
        G = np.asarray(generators, dtype=np.int64)
        if G.ndim == 1:
            G = G.reshape(0, n) if G.size == 0 else G[None, :]
        if n is None:
            n = G.shape[1]
        if G.shape[1] != n:
            raise ValueError(f"generator has {G.shape[1]} columns, expected {n}")
        self.field = field
        self.n = n
        self.G, self.pivots = linalg.rref(field, G) if len(G) else (G.reshape(0, n), [])
        self.G.setflags(write=False)

    @property
    def k(self) -> int:
        return len(self.G)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field})"

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field is other.field and self.n == other.n
                and np.array_equal(self.G, other.G))

    def __hash__(self):
        return hash((id(self.field), self.n, self.G.tobytes()))

    def encode(self, message) -> np.ndarray:
        return linalg.matmul(self.field, np.asarray(message), self.G)

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        return linalg.rank(self.field, np.vstack([self.G, word])) == self.k

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        return self.encode(self.field.random(rng, self.k))

    def parity_check(self) -> np.ndarray:
        return linalg.nullspace(self.field, self.G) if self.k else np.eye(self.n, dtype=np.int64)

    def is_subcode_of(self, other: LinearCode) -> bool:
        return all(other.contains(row) for row in self.G)


def _positions(C: LinearCode, R: Iterable[int]) -> list[int]:
    R = list(R)
    if not R:
        raise ValueError("coordinate set is empty")
    if len(set(R)) != len(R) or min(R) < 0 or max(R) >= C.n:
        raise ValueError("coordinate set must be distinct positions in range")
    return R


def puncture(C: LinearCode, R: Iterable[int]) -> LinearCode:
    """C[R]: every codeword projected onto the positions R (in the given order)."""
    R = _positions(C, R)
    return LinearCode(C.field, C.G[:, R], n=len(R))


def shorten(C: LinearCode, R: Iterable[int]) -> LinearCode:
    """C[[R]]: codewords supported inside R, projected onto R."""
    R = _positions(C, R)
    outside = [i for i in range(C.n) if i not in set(R)]
    if not outside:
        return puncture(C, R)
    combos = linalg.left_nullspace(C.field, C.G[:, outside])
    if len(combos) == 0:
        return LinearCode(C.field, np.zeros((0, len(R)), dtype=np.int64), n=len(R))
    words = linalg.matmul(C.field, combos, C.G)
    return LinearCode(C.field, words[:, R], n=len(R))


def dual(C: LinearCode) -> LinearCode:
    return LinearCode(C.field, C.parity_check(), n=C.n)


def full_space(F: GF, n: int) -> LinearCode:
    return LinearCode(F, np.eye(n, dtype=np.int64))


def zero_code(F: GF, n: int) -> LinearCode:
    return LinearCode(F, np.zeros((0, n), dtype=np.int64), n=n)
