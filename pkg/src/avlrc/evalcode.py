"""J-affine variety codes over F_Q and their subfield-subcodes over F_q."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .ambient import DeltaSet, GridSpec, build_delta, closure, is_closed
from .codes import LinearCode
from .galois import FieldTower


@dataclass(frozen=True, eq=False)
class PointSet:
    """The zeros Z_J of I_J in a fixed order.

    Each axis lists gamma_j^0, gamma_j^1, ..., gamma_j^(N_j-2) (increasing
    discrete log), followed by 0 when the axis is not in J.  Points are the
    Cartesian product with axis 0 varying slowest.
    """

    points: np.ndarray = field(repr=False)
    axis_values: tuple[tuple[int, ...], ...]
    index: Mapping[tuple[int, ...], int] = field(repr=False)

    def __len__(self):
        return len(self.points)

    def coord(self, point: Sequence[int]) -> int:
        return self.index[tuple(int(x) for x in point)]


def axis_roots(grid: GridSpec, tower: FieldTower, j: int) -> tuple[int, ...]:
    F = tower.big
    step = (tower.Q - 1) // (grid.N[j] - 1)
    roots = [F.power_of_generator(step * e) for e in range(grid.N[j] - 1)]
    if j not in grid.J:
        roots.append(0)
    return tuple(roots)


def enumerate_points(grid: GridSpec, tower: FieldTower) -> PointSet:
    if grid.Q != tower.Q or grid.q != tower.q:
        raise ValueError("grid and tower disagree on q or Q")
    axes = tuple(axis_roots(grid, tower, j) for j in range(grid.m))
    pts = np.array(list(itertools.product(*axes)), dtype=np.int64).reshape(-1, grid.m)
    index = {tuple(int(x) for x in row): i for i, row in enumerate(pts)}
    pts.setflags(write=False)
    return PointSet(pts, axes, index)


def monomial_vector(tower: FieldTower, pts: PointSet, a: Sequence[int]) -> np.ndarray:
    """ev_J(X^a); an exponent 0 contributes the factor 1 even at the point 0."""
    F = tower.big
    out = np.ones(len(pts), dtype=np.int64)
    for j, e in enumerate(a):
        if e:
            out = F.mul(out, F.pow(pts.points[:, j], int(e)))
    return out


def evaluate(tower: FieldTower, f: Mapping[tuple[int, ...], int], pts: PointSet) -> np.ndarray:
    """Evaluate sum_a f[a] X^a (coefficients in F_Q) at every point."""
    F = tower.big
    out = np.zeros(len(pts), dtype=np.int64)
    for a, c in f.items():
        out = F.add(out, F.mul(c, monomial_vector(tower, pts, a)))
    return out


def build_evaluation_code(grid: GridSpec, tower: FieldTower, delta) -> LinearCode:
    """E_Delta: span of ev_J(X^a) for a in delta (any non-empty subset of H_J)."""
    exps = list(delta.elements if isinstance(delta, DeltaSet) else delta)
    if not exps:
        raise ValueError("defining set must be non-empty")
    pts = enumerate_points(grid, tower)
    rows = [monomial_vector(tower, pts, a) for a in exps]
    return LinearCode(tower.big, np.array(rows), n=len(pts))


@dataclass(frozen=True, eq=False)
class TraceBasis:
    """Rows ev_J(T_a(xi_a^k X^a)) for each representative a and 0 <= k < i_a.

    ``rows_Q`` keeps the F_Q values, ``rows`` the same vectors mapped to F_q.
    """

    reps: tuple[tuple[int, ...], ...]
    xi: Mapping[tuple[int, ...], int]
    row_owner: tuple[tuple[int, ...], ...]
    rows_Q: np.ndarray = field(repr=False)
    rows: np.ndarray = field(repr=False)

    def block(self, a) -> np.ndarray:
        sel = [i for i, owner in enumerate(self.row_owner) if owner == tuple(a)]
        return self.rows[sel]


def xi_for_orbit(tower: FieldTower, size: int) -> int:
    """A primitive element of F_(q^size), realised inside F_Q."""
    if tower.extension_degree % size:
        raise AssertionError(f"orbit size {size} does not divide [F_Q : F_q]={tower.extension_degree}")
    return tower.big.power_of_generator((tower.Q - 1) // (tower.q**size - 1))


def trace_basis(grid: GridSpec, tower: FieldTower, delta: DeltaSet, pts: PointSet | None = None) -> TraceBasis:
    pts = pts or enumerate_points(grid, tower)
    F = tower.big
    rows, owners, xis = [], [], {}
    for orb in delta.orbits:
        a, i_a = orb.representative, orb.size
        xi = xi_for_orbit(tower, i_a)
        xis[a] = xi
        mono = monomial_vector(tower, pts, a)
        for k in range(i_a):
            rows.append(tower.trace(F.mul(F.pow(xi, k), mono), i_a))
            owners.append(a)
    rows_Q = np.array(rows, dtype=np.int64)
    if not np.all(tower.in_subfield(rows_Q)):
        raise AssertionError("trace evaluation left the subfield")
    return TraceBasis(delta.reps, xis, tuple(owners), rows_Q, tower.restrict(rows_Q))


def build_subfield_subcode(grid: GridSpec, tower: FieldTower, delta: DeltaSet) -> tuple[LinearCode, TraceBasis]:
    """C_Delta = E_Delta intersected with F_q^n, generated by the trace basis."""
    if not is_closed(grid, delta.elements):
        raise ValueError("defining set is not closed; close it with build_delta first")
    pts = enumerate_points(grid, tower)
    basis = trace_basis(grid, tower, delta, pts)
    return LinearCode(tower.small, basis.rows, n=len(pts)), basis


def subfield_subcode_oracle(E: LinearCode, tower: FieldTower) -> LinearCode:
    """E intersected with F_q^n by direct linear algebra over GF(p).

    Writes each F_Q coefficient of a message in the prime-field basis and
    solves for the combinations whose every coordinate is fixed by x -> x^q.
    """
    if E.field is not tower.big:
        raise ValueError("oracle expects a code over F_Q")
    n = E.n
    if E.k == 0:
        return LinearCode(tower.small, np.zeros((0, n), dtype=np.int64), n=n)
    F, ell, p = tower.big, tower.ell, tower.p
    basis_elems = p ** np.arange(ell, dtype=np.int64)
    V = F.mul(basis_elems[None, :, None], E.G[:, None, :]).reshape(-1, n)
    frob = F.sub(F.pow(V, tower.q), V)
    A = F.to_digits(frob).reshape(len(V), n * ell).T
    from .galois import field as gf
    Fp = gf(p, 1)
    sols = linalg.nullspace(Fp, A)
    if len(sols) == 0:
        return LinearCode(tower.small, np.zeros((0, n), dtype=np.int64), n=n)
    words = linalg.matmul(F, sols, V)
    return LinearCode(tower.small, tower.restrict(words), n=n)


def dual_delta(grid: GridSpec, delta: DeltaSet) -> DeltaSet:
    """H_J minus the orbits of n_J - a; univariate grids with J = {0} only."""
    if grid.m != 1:
        raise ValueError("the dual defining set is defined for one variable only")
    if 0 not in grid.J:
        raise ValueError("the dual defining set needs J = {0}")
    n = grid.length
    negated = {(-a[0]) % n for a in delta.elements}
    rest = [(b,) for b in range(n) if b not in negated]
    if not rest:
        raise ValueError("dual defining set is empty (Delta is the whole grid)")
    return closure(grid, rest)


def axis_automorphisms(grid: GridSpec, tower: FieldTower, pts: PointSet) -> list[np.ndarray]:
    """Coordinate permutations from scaling one axis by gamma_j.

    ``perm[i]`` is the position of the image of point i; every E_Delta and
    C_Delta is invariant under ``word -> word[perm]``.
    """
    F = tower.big
    perms = []
    for j in range(grid.m):
        gamma = F.power_of_generator((tower.Q - 1) // (grid.N[j] - 1))
        moved = np.array(pts.points)
        moved[:, j] = F.mul(moved[:, j], gamma)
        perms.append(np.array([pts.coord(row) for row in moved], dtype=np.int64))
    return perms


@dataclass(frozen=True, eq=False)
class AffineVarietyCode:
    """A constructed subfield-subcode together with everything that built it."""

    grid: GridSpec
    tower: FieldTower
    delta: DeltaSet
    points: PointSet
    code: LinearCode
    basis: TraceBasis

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def q(self) -> int:
        return self.tower.q

    def evaluation_code(self) -> LinearCode:
        return build_evaluation_code(self.grid, self.tower, self.delta)


def affine_variety_code(grid: GridSpec, tower: FieldTower, reps: Iterable[Sequence[int]] | DeltaSet) -> AffineVarietyCode:
    delta = reps if isinstance(reps, DeltaSet) else build_delta(grid, reps)
    code, basis = build_subfield_subcode(grid, tower, delta)
    return AffineVarietyCode(grid, tower, delta, enumerate_points(grid, tower), code, basis)

