"""Exponent grid H_J, minimal cyclotomic sets and closed defining sets.

Axes are numbered from 0.  For an axis j in J the exponents {0..T_j} are the
ring Z/(T_j+1); for j outside J the nonzero exponents {1..T_j} are Z/T_j and
0 is absorbing under multiplication, because X_j^0 and X_j^(N_j-1) evaluate
differently at the point 0.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class GridSpec:
    """Parameters of the ideal I_J and of the grid H_J.

    ``J`` and ``L`` hold 0-based axis indices.  ``q`` is the size of the code
    alphabet and ``Q`` the size of the evaluation field.
    """

    q: int
    Q: int
    N: tuple[int, ...]
    J: frozenset[int]
    L: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "N", tuple(int(x) for x in self.N))
        object.__setattr__(self, "J", frozenset(self.J))
        object.__setattr__(self, "L", frozenset(self.L))
        m = len(self.N)
        if m < 1:
            raise ValueError("at least one variable is required")
        if not self.J <= set(range(m)):
            raise ValueError(f"J={sorted(self.J)} is not a set of axes 0..{m - 1}")
        if not self.L <= self.J:
            raise ValueError(f"L={sorted(self.L)} must be a subset of J={sorted(self.J)}")
        for j, Nj in enumerate(self.N):
            if Nj < 2:
                raise ValueError(f"N[{j}]={Nj} must exceed 1")
            if (self.Q - 1) % (Nj - 1):
                raise ValueError(f"N[{j}]-1={Nj - 1} does not divide Q-1={self.Q - 1}")
        for j in self.L:
            if (self.N[j] - 1) % (self.q - 1):
                raise ValueError(f"q-1={self.q - 1} does not divide N[{j}]-1={self.N[j] - 1} for axis {j} in L")

    @property
    def m(self) -> int:
        return len(self.N)

    @property
    def T(self) -> tuple[int, ...]:
        return tuple(Nj - 2 if j in self.J else Nj - 1 for j, Nj in enumerate(self.N))

    @property
    def size(self) -> int:
        """#H_J, which also equals the code length n_J."""
        return math.prod(t + 1 for t in self.T)

    @property
    def length(self) -> int:
        return math.prod(Nj - 1 if j in self.J else Nj for j, Nj in enumerate(self.N))

    def contains(self, a: Sequence[int]) -> bool:
        return len(a) == self.m and all(0 <= x <= t for x, t in zip(a, self.T))

    def exponents(self):
        """All of H_J in lexicographic order (materializes the grid)."""
        return itertools.product(*(range(t + 1) for t in self.T))


def axis_mul(grid: GridSpec, j: int, c: int, a_j: int) -> int:
    """c * a_j under the arithmetic convention of axis j."""
    T = grid.T[j]
    if not 0 <= a_j <= T:
        raise ValueError(f"exponent {a_j} outside 0..{T} on axis {j}")
    if j in grid.J:
        return (c * a_j) % (T + 1)
    if a_j == 0:
        return 0
    r = (c * a_j) % T
    return T if r == 0 else r


def scale(grid: GridSpec, a: Sequence[int], c: int) -> Exponent:
    return tuple(axis_mul(grid, j, c, x) for j, x in enumerate(a))


@dataclass(frozen=True)
class CyclotomicSet:
    """The orbit {a, qa, q^2 a, ...} listed from its representative."""

    representative: Exponent
    elements: tuple[Exponent, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, a):
        return tuple(a) in set(self.elements)


def _raw_orbit(grid: GridSpec, a: Exponent) -> list[Exponent]:
    out, seen, y = [], set(), tuple(a)
    while y not in seen:
        seen.add(y)
        out.append(y)
        y = scale(grid, y, grid.q)
    if y != tuple(a):
        raise AssertionError(f"multiplication by q is not a permutation at {a}")
    return out


def find_representative(elements: Iterable[Sequence[int]]) -> Exponent:
    """Iteratively minimal element: smallest first coordinate, then second, ..."""
    pool = [tuple(e) for e in elements]
    if not pool:
        raise ValueError("empty orbit")
    for j in range(len(pool[0])):
        best = min(e[j] for e in pool)
        pool = [e for e in pool if e[j] == best]
    return pool[0]


def cyclotomic_orbit(grid: GridSpec, a: Sequence[int]) -> CyclotomicSet:
    a = tuple(int(x) for x in a)
    if not grid.contains(a):
        raise ValueError(f"{a} is not in H_J")
    rep = find_representative(_raw_orbit(grid, a))
    return CyclotomicSet(rep, tuple(_raw_orbit(grid, rep)))


def sigma_L(grid: GridSpec, a: Sequence[int]) -> int:
    return sum(a[j] for j in grid.L)


@dataclass(frozen=True)
class DeltaSet:
    """A closed defining set: a union of minimal cyclotomic sets."""

    grid: GridSpec
    orbits: tuple[CyclotomicSet, ...]

    @property
    def reps(self) -> tuple[Exponent, ...]:
        return tuple(o.representative for o in self.orbits)

    @property
    def elements(self) -> tuple[Exponent, ...]:
        return tuple(e for o in self.orbits for e in o.elements)

    @property
    def sigma_values(self) -> dict[Exponent, int]:
        return {a: sigma_L(self.grid, a) for a in self.reps}

    def __len__(self):
        return sum(o.size for o in self.orbits)

    def __contains__(self, a):
        return any(tuple(a) in o for o in self.orbits)

    def union(self, reps: Iterable[Sequence[int]]) -> DeltaSet:
        return build_delta(self.grid, list(self.reps) + [tuple(r) for r in reps])


def build_delta(grid: GridSpec, reps: Iterable[Sequence[int]]) -> DeltaSet:
    """Close the given exponents under multiplication by q.

    Members that are not representatives are replaced by the representative
    of their orbit; repeated orbits are merged and logged.
    """
    orbits: dict[Exponent, CyclotomicSet] = {}
    for a in reps:
        orb = cyclotomic_orbit(grid, a)
        if orb.representative in orbits:
            logger.warning("cyclotomic set of %s listed more than once; merged", tuple(a))
            continue
        orbits[orb.representative] = orb
    if not orbits:
        raise ValueError("defining set must be non-empty")
    return DeltaSet(grid, tuple(orbits.values()))


def closure(grid: GridSpec, subset: Iterable[Sequence[int]]) -> DeltaSet:
    """The smallest closed set containing ``subset``; repeats are expected and not logged."""
    reps = dict.fromkeys(cyclotomic_orbit(grid, a).representative for a in subset)
    return build_delta(grid, reps)


def is_closed(grid: GridSpec, subset: Iterable[Sequence[int]]) -> bool:
    s = {tuple(a) for a in subset}
    return all(set(cyclotomic_orbit(grid, a).elements) <= s for a in s)


def all_representatives(grid: GridSpec) -> list[Exponent]:
    """Representatives of every minimal cyclotomic set, in lexicographic order."""
    seen: set[Exponent] = set()
    reps = []
    for a in grid.exponents():
        if a in seen:
            continue
        orb = cyclotomic_orbit(grid, a)
        seen.update(orb.elements)
        reps.append(orb.representative)
    return sorted(reps)
