"""Orbits of points, local erasure recovery, localities and Singleton defects."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .ambient import DeltaSet, GridSpec, sigma_L
from .codes import LinearCode, puncture
from .evalcode import AffineVarietyCode, PointSet, axis_automorphisms
from .galois import FieldTower
from .metrics import DistanceResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Orbit:
    """The q-1 points eta^n *_L P_t0, n = 0..q-2, and their positions."""

    base: int
    points: tuple[tuple[int, ...], ...]
    positions: tuple[int, ...]

    def __len__(self):
        return len(self.positions)


def scale_L(grid: GridSpec, tower: FieldTower, point: Sequence[int], c: int) -> tuple[int, ...]:
    """Multiply the L-coordinates of a point (in F_Q) by c, keep the rest."""
    F = tower.big
    return tuple(int(F.mul(x, c)) if j in grid.L else int(x) for j, x in enumerate(point))


def make_orbit(grid: GridSpec, tower: FieldTower, pts: PointSet, t0: int) -> Orbit:
    if not grid.L:
        raise ValueError("orbits need a non-empty L")
    if not 0 <= t0 < len(pts):
        raise ValueError(f"position {t0} outside 0..{len(pts) - 1}")
    F = tower.big
    P = tuple(int(x) for x in pts.points[t0])
    points, positions = [], []
    for n in range(tower.q - 1):
        Y = scale_L(grid, tower, P, F.pow(tower.eta, n))
        if Y not in pts.index:
            raise ValueError(f"{Y} is not a zero of I_J; L is inconsistent with the grid")
        points.append(Y)
        positions.append(pts.index[Y])
    if len(set(positions)) != len(positions):
        raise AssertionError("orbit points are not distinct")
    return Orbit(t0, tuple(points), tuple(positions))


def position_orbits(avc: AffineVarietyCode) -> list[tuple[int, ...]]:
    """The position sets coord(R_t) partitioning all coordinates."""
    seen, out = set(), []
    for t in range(avc.n):
        if t in seen:
            continue
        orb = make_orbit(avc.grid, avc.tower, avc.points, t)
        seen.update(orb.positions)
        out.append(orb.positions)
    return out


def sigma_classes(avc: AffineVarietyCode) -> dict[int, list[tuple[int, ...]]]:
    """Representatives grouped by sigma_L modulo q-1."""
    classes: dict[int, list] = {}
    for a in avc.delta.reps:
        classes.setdefault(sigma_L(avc.grid, a) % (avc.q - 1), []).append(a)
    return classes


def recover_vandermonde(avc: AffineVarietyCode, word, orbit: Orbit, exponents: Sequence[int] | None = None,
                        known: Mapping[int, int] | None = None) -> int:
    """Recover word[orbit.base] from r orbit neighbours.

    Component h_a of the codeword scales by eta^(n sigma_L(a)) along the
    orbit, so the values at eta^(n_i) P for r distinct classes of sigma_L mod
    q-1 form a Vandermonde system in eta^sigma.  ``known`` maps class -> an
    already known component value at the base point, removed before solving.
    """
    F = avc.tower.small
    q = avc.q
    classes = sorted(sigma_classes(avc))
    known = dict(known or {})
    unknown = [c for c in classes if c not in known]
    r = len(unknown)
    if r > q - 2:
        raise ValueError(f"{r} sigma classes exceed q-2={q - 2}")
    ns = list(range(1, r + 1)) if exponents is None else list(exponents)
    if len(ns) != r or len(set(ns)) != r or not all(1 <= x <= q - 2 for x in ns):
        raise ValueError(f"need {r} distinct exponents in 1..{q - 2}")
    eta = F.generator
    word = np.asarray(word, dtype=np.int64)
    rhs = np.array([word[orbit.positions[x]] for x in ns], dtype=np.int64)
    for c, val in known.items():
        rhs = F.sub(rhs, F.mul(np.array([F.pow(eta, c * x) for x in ns], dtype=np.int64), val))
    M = np.array([[F.pow(eta, c * x) for c in unknown] for x in ns], dtype=np.int64).reshape(r, r)
    if r:
        sol = linalg.solve(F, M, rhs)
        if sol is None or linalg.rank(F, M) < r:
            raise np.linalg.LinAlgError("recovery system is singular")
    else:
        sol = np.zeros(0, dtype=np.int64)
    total = F.sum(np.concatenate([sol, np.array(list(known.values()), dtype=np.int64)]))
    return int(total)


def _extended_points(avc: AffineVarietyCode, t0: int, a_v: int) -> list[int]:
    """Positions of omega^k eta *_L P_t0 for k = 0..a_v-1."""
    tower, grid = avc.tower, avc.grid
    F = tower.big
    omega = F.power_of_generator((tower.Q - 1) // a_v)
    P = avc.points.points[t0]
    out = []
    for k in range(a_v):
        Y = scale_L(grid, tower, P, F.mul(F.pow(omega, k), tower.eta))
        if Y not in avc.points.index:
            raise ValueError(f"{Y} is not a zero of I_J")
        out.append(avc.points.index[Y])
    return out


def check_extended_conditions(avc: AffineVarietyCode, v: Sequence[int]) -> int:
    """Validate the divisibility and coprimality conditions; return a_v."""
    grid, q = avc.grid, avc.q
    if grid.L != frozenset({0}):
        raise ValueError("extended recovery needs L = {0}")
    reps = list(avc.delta.reps)
    if tuple(v) not in reps:
        raise ValueError(f"{tuple(v)} is not a representative of the defining set")
    firsts = [a[0] for a in reps]
    if len(reps) != q - 1 or len({x % (q - 1) for x in firsts}) != q - 1:
        raise ValueError("need q-1 representatives with first coordinates distinct mod q-1")
    a_v = v[0]
    if a_v <= 1:
        raise ValueError("a_v must exceed 1; use the plain orbit recovery instead")
    if (grid.N[0] - 1) % a_v:
        raise ValueError(f"a_v={a_v} does not divide N_1-1={grid.N[0] - 1}")
    if math.gcd(a_v, q - 1) != 1:
        raise ValueError(f"gcd(a_v, q-1) != 1 for a_v={a_v}")
    for a in reps:
        if tuple(a) != tuple(v) and math.gcd(a_v, a[0]) != 1:
            raise ValueError(f"gcd(a_v, {a[0]}) != 1")
    return a_v


def extended_recovery_set(avc: AffineVarietyCode, t0: int, v: Sequence[int]) -> list[int]:
    a_v = check_extended_conditions(avc, v)
    orbit = make_orbit(avc.grid, avc.tower, avc.points, t0)
    extra = _extended_points(avc, t0, a_v)[1:]
    return sorted(set(orbit.positions[1:]) | set(extra))


def recover_extended(avc: AffineVarietyCode, word, t0: int, v: Sequence[int]) -> int:
    """Recover word[t0] with q-1 representatives, isolating the class of a_v first.

    Summing the codeword over omega^k eta *_L P_t0 (k = 0..a_v-1, omega of
    order a_v) kills every component whose first exponent is prime to a_v and
    leaves a_v * eta^(a_v) * h_v(P_t0).  a_v divides Q-1, so p does not divide
    a_v and the division is always possible.
    """
    a_v = check_extended_conditions(avc, v)
    F = avc.tower.small
    q = avc.q
    word = np.asarray(word, dtype=np.int64)
    pos = _extended_points(avc, t0, a_v)
    s = F.sum(word[pos])
    coef = F.mul(F.scalar(a_v), F.pow(F.generator, a_v))
    h_v = int(F.div(s, coef))
    orbit = make_orbit(avc.grid, avc.tower, avc.points, t0)
    return recover_vandermonde(avc, word, orbit, known={a_v % (q - 1): h_v})


def orbit_code(avc: AffineVarietyCode, orbit: Orbit) -> LinearCode:
    return puncture(avc.code, orbit.positions)


def recover_mds_orbit(avc: AffineVarietyCode, word, erased: Iterable[int], orbit: Orbit) -> dict[int, int]:
    """Erasure-decode the punctured orbit code from its surviving positions.

    ``erased`` are positions inside the orbit; returns position -> symbol.
    """
    F = avc.tower.small
    erased = sorted(set(int(e) for e in erased))
    pos = list(orbit.positions)
    if not set(erased) <= set(pos):
        raise ValueError("erased positions must lie inside the orbit")
    if not erased:
        return {}
    D = puncture(avc.code, pos)
    if len(erased) > len(pos) - D.k:
        raise ValueError(f"{len(erased)} erasures exceed what the [{len(pos)},{D.k}] orbit code can fill")
    where = {p: i for i, p in enumerate(pos)}
    keep = [i for i, p in enumerate(pos) if p not in set(erased)]
    lost = [where[p] for p in erased]
    B = D.G
    if linalg.rank(F, B[:, keep]) < D.k:
        raise ValueError("surviving positions do not determine the orbit symbols")
    word = np.asarray(word, dtype=np.int64)
    coeffs = linalg.solve(F, B[:, keep].T, word[[pos[i] for i in keep]])
    if coeffs is None:
        raise ValueError("surviving symbols are not consistent with the code")
    vals = linalg.matmul(F, coeffs, B[:, lost])
    return {p: int(x) for p, x in zip(erased, np.atleast_1d(vals))}


def consecutive_classes(values: Iterable[int], modulus: int) -> bool:
    """True when the residues mod ``modulus`` form one cyclic run c, c+1, ..., c+r-1."""
    classes = sorted({v % modulus for v in values})
    r = len(classes)
    return any({(c + i) % modulus for i in range(r)} == set(classes) for c in classes)


def locality_pair(grid: GridSpec, delta: DeltaSet, q: int | None = None) -> tuple[int, int]:
    """(r, q-r) when the sigma_L values fall into r consecutive classes mod q-1, r <= q-2.

    Consecutive integers are the usual case; a run that wraps around q-1
    gives the same MDS orbit code up to a diagonal scaling.
    """
    q = q or grid.q
    vals = [sigma_L(grid, a) for a in delta.reps]
    r = len({v % (q - 1) for v in vals})
    if not consecutive_classes(vals, q - 1):
        raise ValueError(f"sigma_L values {sorted(set(vals))} are not consecutive modulo {q - 1}")
    if r > q - 2:
        raise ValueError(f"r={r} exceeds q-2={q - 2}")
    return r, q - r


def plain_locality(grid: GridSpec, delta: DeltaSet) -> int | None:
    """The orbit recovery bound r, or None when sigma_L collides mod q-1."""
    q = grid.q
    vals = [sigma_L(grid, a) % (q - 1) for a in delta.reps]
    distinct = len(set(vals))
    return distinct if distinct <= q - 2 else None


def rt_chain(r: int, delta: int) -> dict[int, int]:
    """Upper bounds r_t <= r + t - 1 for t = 1..delta-1."""
    return {t: r + t - 1 for t in range(1, delta)}


def singleton_defects(n: int, k: int, d: int, r: int, delta: int,
                      rt: Mapping[int, int] | None = None) -> dict[str, object]:
    """D_1, the D_(delta-1) estimate and D_t for each available r_t."""
    rt = dict(rt or rt_chain(r, delta))
    out: dict[str, object] = {
        "D1": n + 2 - d - k - math.ceil(k / r),
        "Ddelta": n + 1 - (d + k + (math.ceil(k / r) - 1) * (delta - 1)),
    }
    out["Dt"] = {t: n + t + 1 - d - k - math.ceil(k / (rt_t - t + 1)) * t for t, rt_t in rt.items()}
    return out


def punctured_is_robust(F, G: np.ndarray, S: Sequence[int], t: int) -> bool:
    """d(C[S]) >= t+1: removing any t positions of S keeps the rank."""
    rank = linalg.rank(F, G[:, list(S)])
    if rank == 0:
        return True
    for T in itertools.combinations(range(len(S)), t):
        rest = [S[i] for i in range(len(S)) if i not in T]
        if linalg.rank(F, G[:, rest]) < rank:
            return False
    return True


def _smallest_robust_set(F, G: np.ndarray, i: int, t: int, max_size: int) -> int | None:
    """min |S| with i in S and d(C[S]) >= t+1, searching sizes up to max_size."""
    n = G.shape[1]
    cols = np.ascontiguousarray(G.T)
    others = np.array([j for j in range(n) if j != i], dtype=np.int64)

    def descend(chosen, rank, cand, resid, size):
        if len(chosen) == size:
            return punctured_is_robust(F, G, chosen, t)
        need = size - len(chosen)
        for pos in range(len(cand) - need + 1):
            v = resid[pos]
            rest = resid[pos + 1:]
            if v.any():
                if rank + 1 > size - t:
                    continue
                p = int(np.flatnonzero(v)[0])
                b = F.mul(v, F.inv(v[p]))
                rest = F.sub(rest, F.mul(rest[:, p, None], b[None, :]))
                ok = descend(chosen + [int(cand[pos])], rank + 1, cand[pos + 1:], rest, size)
            else:
                ok = descend(chosen + [int(cand[pos])], rank, cand[pos + 1:], rest, size)
            if ok:
                return True
        return False

    v = cols[i]
    rank0 = 1 if v.any() else 0
    resid = cols[others]
    if rank0:
        p = int(np.flatnonzero(v)[0])
        b = F.mul(v, F.inv(v[p]))
        resid = F.sub(resid, F.mul(resid[:, p, None], b[None, :]))
    for size in range(t + 1, max_size + 1):
        if rank0 > size - t:
            continue
        if descend([i], rank0, others, resid, size):
            return size
    return None


def rt_exact(C: LinearCode, t: int, positions: Iterable[int] | None = None, max_size: int | None = None) -> int:
    """Exact t-locality: the largest over coordinates of the smallest robust set, minus one.

    ``positions`` may restrict the maximum to one coordinate per orbit of a
    permutation group preserving C.
    """
    from .metrics import min_distance
    d = min_distance(C)
    if not d.exact:
        raise ValueError("exact minimum distance needed to range-check t")
    if not 1 <= t <= d.value - 1:
        raise ValueError(f"t={t} outside 1..d-1={d.value - 1}")
    F, G, n = C.field, C.G, C.n
    max_size = max_size or n
    worst = 0
    for i in (range(n) if positions is None else positions):
        s = _smallest_robust_set(F, G, i, t, max_size)
        if s is None:
            raise ValueError(f"no robust set of size <= {max_size} for position {i}")
        worst = max(worst, s)
    return worst - 1


def availability_count(orbit_size: int, r: int) -> int:
    """Guaranteed number of size-r recovery sets inside one orbit."""
    if not 0 <= r <= orbit_size - 1:
        raise ValueError("r must lie in 0..orbit_size-1")
    return math.comb(orbit_size - 1, r)


def odd_q_univariate_params(q: int, r: int) -> tuple[int, int, int, int]:
    """(n, k, d lower bound, defect upper bound) for the univariate family with Q = q^2, q odd."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if not 2 <= r <= q - 2:
        raise ValueError(f"r={r} outside 2..q-2")
    n = 2 * (q - 1)
    k = 2 * r - math.ceil(r / 2)
    d = (q - 1) - 2 * ((r - 2) // 2)
    defect = math.ceil(r / 2) + 2 * ((r - 2) // 2) + 1 - r
    return n, k, d, defect


def cyclic_run_bound(n: int, exponents: Iterable[int]) -> int:
    """d(C-perp) >= w+1 when Delta holds w cyclically consecutive exponents mod n."""
    s = {int(e) % n for e in exponents}
    if len(s) == n:
        return n + 1
    best = 0
    for start in s:
        if (start - 1) % n in s:
            continue
        w = 0
        while (start + w) % n in s:
            w += 1
        best = max(best, w)
    return best + 1


def cyclic_span_bound(n: int, exponents: Iterable[int]) -> int:
    """d(C) >= n + 1 - (shortest cyclic interval covering the exponents)."""
    s = sorted({int(e) % n for e in exponents})
    if not s:
        raise ValueError("empty exponent set")
    gaps = [(s[(i + 1) % len(s)] - s[i]) % n or n for i in range(len(s))]
    return max(gaps)


def univariate_bounds(avc: AffineVarietyCode) -> tuple[int, int] | None:
    """Proven lower bounds (d, d_perp) for univariate codes with J = {0}."""
    g = avc.grid
    if g.m != 1 or 0 not in g.J:
        return None
    exps = [a[0] for a in avc.delta.elements]
    return cyclic_span_bound(g.length, exps), cyclic_run_bound(g.length, exps)


def automorphism_anchors(avc: AffineVarietyCode) -> list[int]:
    """One position per orbit of the group generated by the axis scalings."""
    perms = axis_automorphisms(avc.grid, avc.tower, avc.points)
    parent = list(range(avc.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for i, j in enumerate(perm):
            a, b = find(i), find(int(j))
            if a != b:
                parent[max(a, b)] = min(a, b)
    return sorted({find(i) for i in range(avc.n)})


@dataclass(frozen=True)
class LocalityReport:
    r_bound: int | None
    d_dual: DistanceResult | None
    r_delta: tuple[int, int] | None
    rt_bounds: dict[int, int] = field(default_factory=dict)
    defects: dict[str, object] = field(default_factory=dict)
    sharp: bool | None = None


def sharpness(report: LocalityReport) -> bool:
    """True iff the achieved classical locality equals d(C-perp) - 1."""
    if report.d_dual is None or not report.d_dual.exact:
        raise ValueError("sharpness needs an exact dual distance")
    if report.r_bound is None:
        raise ValueError("no locality bound available")
    return report.r_bound == report.d_dual.value - 1


def locality_report(avc: AffineVarietyCode, d: int, d_dual: DistanceResult | None = None) -> LocalityReport:
    grid = avc.grid
    r = plain_locality(grid, avc.delta)
    try:
        pair = locality_pair(grid, avc.delta)
    except ValueError:
        pair = None
    if pair:
        rt = rt_chain(*pair)
        defects = singleton_defects(avc.n, avc.k, d, pair[0], pair[1], rt)
    elif r:
        rt = {1: r}
        defects = singleton_defects(avc.n, avc.k, d, r, 2, rt)
    else:
        rt, defects = {}, {}
    report = LocalityReport(r, d_dual, pair, rt, defects)
    sharp = None
    if d_dual is not None and d_dual.exact and r is not None:
        sharp = sharpness(report)
    return LocalityReport(r, d_dual, pair, rt, defects, sharp)


@dataclass(frozen=True)
class SimulationSummary:
    trials: int
    erasures: int
    successes: int
    mean_read: float


def simulate_recovery(avc: AffineVarietyCode, trials: int, erasures: int, seed: int) -> SimulationSummary:
    """Random codeword, random t0 and erasures inside coord(R_t0); decode and compare."""
    pair = locality_pair(avc.grid, avc.delta)
    delta = pair[1]
    if erasures > delta - 1:
        raise ValueError(f"{erasures} erasures exceed delta-1={delta - 1}: the orbit code only "
                         f"guarantees d(C[R]) >= delta")
    if erasures < 0:
        raise ValueError("erasures must be non-negative")
    F = avc.tower.small
    children = np.random.SeedSequence(seed).spawn(trials)
    orbit_cache: dict[int, Orbit] = {}
    ok, read = 0, 0
    for ss in children:
        rng = np.random.default_rng(ss)
        word = avc.code.encode(F.random(rng, avc.k))
        t0 = int(rng.integers(avc.n))
        orb = orbit_cache.get(t0) or orbit_cache.setdefault(t0, make_orbit(avc.grid, avc.tower, avc.points, t0))
        if erasures == 0:
            ok += 1
            continue
        others = [p for p in orb.positions if p != t0]
        extra = rng.choice(len(others), size=erasures - 1, replace=False)
        E = [t0] + [others[i] for i in extra]
        damaged = word.copy()
        damaged[E] = 0
        rec = recover_mds_orbit(avc, damaged, E, orb)
        ok += all(rec[p] == word[p] for p in E)
        read += len(orb) - len(E)
    return SimulationSummary(trials, erasures, ok, read / trials if trials else 0.0)
