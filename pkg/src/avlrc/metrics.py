"""Minimum distance, dual distance, MDS checks and generalized Hamming weights.

Exact distances enumerate one message per projective point (leading nonzero
coefficient equal to 1), so a code over F_q costs (q^k - 1)/(q - 1) codewords.
Each projective class is split into an inner block of precomputed partial
codewords and an outer Python loop over the remaining coefficients.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import LinearCode, dual, puncture
from .galois import GF

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 20_000_000
INNER_BLOCK = 50_000


@dataclass(frozen=True)
class DistanceResult:
    """A minimum distance, exact or only an upper bound.

    ``enumerated`` counts codewords (or column subsets) examined.  ``lower``
    is a proven lower bound when one was supplied; meeting it with a witness
    makes the value exact.
    """

    value: int
    mode: str
    enumerated: int
    method: str = ""
    lower: int | None = None
    witness: tuple[int, ...] | None = None

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def __str__(self):
        return str(self.value) if self.exact else f"<={self.value}"


def worker_count() -> int:
    raw = os.environ.get("LRC_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning("ignoring LRC_THREADS=%r", raw)
        return 1


def _scaled(F: GF, rows: np.ndarray) -> np.ndarray:
    """table[i, c] = c * rows[i] for every field element c."""
    return F.mul(F.elements()[None, :, None], rows[:, None, :])


def _span_table(F: GF, scaled: np.ndarray) -> np.ndarray:
    """All F-combinations of the rows whose scaled tables are given."""
    n = scaled.shape[-1]
    T = np.zeros((1, n), dtype=np.int64)
    for S in scaled:
        T = F.add(S[:, None, :], T[None, :, :]).reshape(-1, n)
    return T


def _min_over_outer(F: GF, base, inner, outer_scaled, prefixes, stop_at):
    best, arg, count = base.shape[0] + 1, None, 0
    for pref in prefixes:
        v = base
        for S, c in zip(outer_scaled, pref):
            if c:
                v = F.add(v, S[c])
        words = F.add(inner, v[None, :])
        w = np.count_nonzero(words, axis=1)
        count += len(w)
        j = int(np.argmin(w))
        if w[j] < best:
            best, arg = int(w[j]), words[j].copy()
            if best <= stop_at:
                break
    return best, arg, count


def _outer_job(args):
    F, base, inner, outer_scaled, prefixes, stop_at = args
    return _min_over_outer(F, base, inner, outer_scaled, prefixes, stop_at)


def _projective_min(F: GF, G: np.ndarray, stop_at: int = 0, workers: int = 1):
    """Minimum weight over all nonzero codewords of the row space of G."""
    k, n = G.shape
    q = F.order
    best, arg, total = n + 1, None, 0
    for lead in range(k):
        free = G[lead + 1:]
        b = 0
        while b < len(free) and q ** (b + 1) <= INNER_BLOCK:
            b += 1
        inner_rows, outer_rows = free[len(free) - b:], free[:len(free) - b]
        inner = _span_table(F, _scaled(F, inner_rows)) if b else np.zeros((1, n), dtype=np.int64)
        outer_scaled = _scaled(F, outer_rows) if len(outer_rows) else np.zeros((0, q, n), dtype=np.int64)
        prefixes = list(itertools.product(range(q), repeat=len(outer_rows)))
        if workers > 1 and len(prefixes) >= 4 * workers:
            chunks = [prefixes[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(workers) as ex:
                results = list(ex.map(_outer_job, [(F, G[lead], inner, outer_scaled, c, stop_at) for c in chunks]))
        else:
            results = [_min_over_outer(F, G[lead], inner, outer_scaled, prefixes, stop_at)]
        for w, word, cnt in results:
            total += cnt
            if w < best:
                best, arg = w, word
        if best <= stop_at:
            break
    return best, arg, total


def _weight_pairs(F: GF, R: np.ndarray):
    """Lowest weight among rows of R and all combinations row_i + c*row_j."""
    w = np.count_nonzero(R, axis=1)
    i = int(np.argmin(w))
    best, arg = int(w[i]), R[i]
    k = len(R)
    if k >= 2:
        I, J = np.triu_indices(k, 1)
        S = _scaled(F, R)[:, 1:, :]
        combos = F.add(R[I][:, None, :], S[J])
        wc = np.count_nonzero(combos, axis=2)
        flat = int(np.argmin(wc))
        a, c = np.unravel_index(flat, wc.shape)
        if wc[a, c] < best:
            best, arg = int(wc[a, c]), combos[a, c]
    return best, arg


def _isd_search(F: GF, G: np.ndarray, rng: np.random.Generator, iterations: int, stop_at: int):
    """Information-set search: systematic forms on random column orders."""
    k, n = G.shape
    best, arg = n + 1, None
    count = 0
    for _ in range(iterations):
        perm = rng.permutation(n)
        R, _ = linalg.rref(F, G[:, perm])
        w, word = _weight_pairs(F, R)
        count += len(R) * len(R) * F.order // 2
        if w < best:
            best = w
            arg = np.empty(n, dtype=np.int64)
            arg[perm] = word
            if best <= stop_at:
                break
    return best, arg, count


def min_distance(C: LinearCode, budget: int = DEFAULT_BUDGET, *, seed: int = 0,
                 isd_iterations: int = 400, random_messages: int = 20_000,
                 lower_bound: int | None = None, workers: int | None = None) -> DistanceResult:
    """Exact minimum distance when q^k <= budget, otherwise a searched upper bound.

    A supplied ``lower_bound`` must be proven; when the search finds a word of
    exactly that weight the result is exact.
    """
    if C.k == 0:
        raise ValueError("the zero code has no minimum distance")
    F, G = C.field, C.G
    q, k, n = F.order, C.k, C.n
    stop = lower_bound or 1
    if q**k <= budget:
        w, word, cnt = _projective_min(F, G, stop_at=stop, workers=workers or worker_count())
        method = "enumeration" if not lower_bound or w > lower_bound else "enumeration+bound"
        return DistanceResult(w, "exact", cnt, method, lower_bound, _support(word))
    rng = np.random.default_rng(seed)
    best, arg = _weight_pairs(F, G)
    count = k * k * q // 2
    if best > stop:
        w, word, cnt = _isd_search(F, G, rng, isd_iterations, stop)
        count += cnt
        if w < best:
            best, arg = w, word
    if best > stop and random_messages:
        msgs = F.random(rng, (random_messages, k))
        words = linalg.matmul(F, msgs, G)
        wts = np.count_nonzero(words, axis=1)
        wts[np.all(msgs == 0, axis=1)] = n + 1
        j = int(np.argmin(wts))
        count += random_messages
        if wts[j] < best:
            best, arg = int(wts[j]), words[j]
    if lower_bound is not None and best < lower_bound:
        raise AssertionError(f"found weight {best} below the claimed lower bound {lower_bound}")
    if lower_bound is not None and best == lower_bound:
        return DistanceResult(best, "exact", count, "search+bound", lower_bound, _support(arg))
    return DistanceResult(best, "upper_bound", count, "search", lower_bound, _support(arg))


def _support(word) -> tuple[int, ...] | None:
    return None if word is None else tuple(int(i) for i in np.nonzero(word)[0])


def min_distance_bruteforce(C: LinearCode, cap: int = 100_000) -> int:
    """Independent oracle: encode every message and scan Hamming weights."""
    F, k = C.field, C.k
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    if F.order**k > cap:
        raise ValueError(f"q^k={F.order**k} exceeds the brute-force cap {cap}")
    msgs = np.array(list(itertools.product(range(F.order), repeat=k)), dtype=np.int64)[1:]
    words = linalg.matmul(F, msgs, C.G)
    return int(np.count_nonzero(words, axis=1).min())


# -- dual distance: smallest set of linearly dependent generator columns --

class _SearchBudget(Exception):
    pass


def _dependent_search(F: GF, cols: np.ndarray, size: int, anchors: Sequence[int], node_cap: int):
    """A dependent column set of at most ``size`` columns containing an anchor.

    Depth-first over independent sets; the residuals of all candidate columns
    against the current set are updated by one rank-1 step per node.
    Returns (set or None, nodes visited).
    """
    n = len(cols)
    nodes = [0]

    def descend(chosen, cand_idx, resid):
        nodes[0] += 1
        if nodes[0] > node_cap:
            raise _SearchBudget
        zero = np.flatnonzero(~resid.any(axis=1))
        if len(zero):
            return chosen + [int(cand_idx[zero[0]])]
        if len(chosen) + 1 >= size:
            return None
        for pos in range(len(cand_idx)):
            v = resid[pos]
            p = int(np.flatnonzero(v)[0])
            b = F.mul(v, F.inv(v[p]))
            rest = resid[pos + 1:]
            rest = F.sub(rest, F.mul(rest[:, p, None], b[None, :]))
            found = descend(chosen + [int(cand_idx[pos])], cand_idx[pos + 1:], rest)
            if found is not None:
                return found
        return None

    for a in anchors:
        v = cols[a]
        if not v.any():
            return [int(a)], nodes[0]
        if size < 2:
            continue
        others = np.array([i for i in range(n) if i != a], dtype=np.int64)
        p = int(np.flatnonzero(v)[0])
        b = F.mul(v, F.inv(v[p]))
        resid = F.sub(cols[others], F.mul(cols[others][:, p, None], b[None, :]))
        found = descend([int(a)], others, resid)
        if found is not None:
            return found, nodes[0]
    return None, nodes[0]


def shrink_to_circuit(F: GF, G: np.ndarray, S: Iterable[int]) -> list[int]:
    """Drop columns from a dependent set while it stays dependent."""
    S = list(S)
    if linalg.rank(F, G[:, S]) == len(S):
        raise ValueError("column set is independent")
    i = 0
    while i < len(S):
        T = S[:i] + S[i + 1:]
        if T and linalg.rank(F, G[:, T]) < len(T):
            S = T
        else:
            i += 1
    return S


def dual_distance(C: LinearCode, budget: int = DEFAULT_BUDGET, *, lower_bound: int | None = None,
                  witnesses: Iterable[Iterable[int]] = (), anchors: Sequence[int] | None = None,
                  node_cap: int = 2_000_000, seed: int = 0) -> DistanceResult:
    """d(C-perp): the fewest generator columns of C that are linearly dependent.

    Enumerates C-perp when q^(n-k) <= budget.  Otherwise candidate dependent
    sets (``witnesses`` and an information-set search on C-perp) give an upper
    bound, and a depth-first search over column subsets proves no smaller
    dependent set exists.  ``anchors`` may list one position per orbit of a
    coordinate permutation group preserving C; ``lower_bound`` must be proven.
    """
    F, n, k = C.field, C.n, C.k
    if k == n:
        raise ValueError("the full space has a zero dual")
    if F.order ** (n - k) <= budget:
        res = min_distance(dual(C), budget)
        return DistanceResult(res.value, "exact", res.enumerated, "dual enumeration", lower_bound, res.witness)
    G = C.G
    best_set: list[int] | None = None
    for S in witnesses:
        S = list(S)
        if linalg.rank(F, G[:, S]) < len(S):
            S = shrink_to_circuit(F, G, S)
            if best_set is None or len(S) < len(best_set):
                best_set = S
    if best_set is None:
        found = min_distance(dual(C), 0, seed=seed)
        best_set = list(found.witness)
    upper = len(best_set)
    lb = max(1, lower_bound or 1)
    if lb > upper:
        raise AssertionError(f"dependent set of size {upper} contradicts lower bound {lb}")
    if lb == upper:
        return DistanceResult(upper, "exact", 0, "witness+bound", lower_bound, tuple(sorted(best_set)))
    cols = np.ascontiguousarray(G.T)
    anchors = list(range(n)) if anchors is None else list(anchors)
    try:
        found, nodes = _dependent_search(F, cols, upper - 1, anchors, node_cap)
    except _SearchBudget:
        return DistanceResult(upper, "upper_bound", node_cap, "witness", lower_bound, tuple(sorted(best_set)))
    if found is None:
        return DistanceResult(upper, "exact", nodes, "column search", lower_bound, tuple(sorted(best_set)))
    # a smaller dependent set exists: shrink and search again below it
    circuit = shrink_to_circuit(F, G, found)
    return dual_distance(C, budget, lower_bound=lower_bound, witnesses=[circuit], anchors=anchors,
                         node_cap=node_cap, seed=seed)


def is_mds(C: LinearCode, budget: int = DEFAULT_BUDGET) -> bool:
    if C.k == 0:
        raise ValueError("the zero code has no minimum distance")
    d = min_distance(C, budget)
    if not d.exact:
        raise ValueError("minimum distance is not exact within the budget")
    return d.value == C.n - C.k + 1


def _rref_subspaces(F: GF, k: int, t: int):
    """Every t-dimensional subspace of F^k, once, as a t x k RREF matrix."""
    q = F.order
    for piv in itertools.combinations(range(k), t):
        free = [(i, c) for i in range(t) for c in range(piv[i] + 1, k) if c not in piv]
        base = np.zeros((t, k), dtype=np.int64)
        base[np.arange(t), list(piv)] = 1
        for vals in itertools.product(range(q), repeat=len(free)):
            M = base.copy()
            for (i, c), v in zip(free, vals):
                M[i, c] = v
            yield M


def subspace_count(q: int, k: int, t: int) -> int:
    """Gaussian binomial [k choose t]_q."""
    num = den = 1
    for i in range(t):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def generalized_hamming_weight(C: LinearCode, t: int, budget: int = 2_000_000) -> int:
    """d_t(C): the smallest support of a t-dimensional subcode, by enumeration."""
    if not 1 <= t <= C.k:
        raise ValueError(f"t={t} outside 1..k={C.k}")
    F = C.field
    if subspace_count(F.order, C.k, t) > budget:
        raise ValueError("too many subspaces to enumerate within the budget")
    best = C.n
    for M in _rref_subspaces(F, C.k, t):
        sub = linalg.matmul(F, M, C.G)
        best = min(best, int(np.count_nonzero(sub.any(axis=0))))
    return best


def dual_generalized_weight(C: LinearCode, t: int, anchors: Sequence[int] | None = None,
                            node_cap: int = 5_000_000) -> int:
    """d_t(C-perp) = min |S| with |S| - rank(G_S) >= t, by subset search."""
    F, n = C.field, C.n
    if not 1 <= t <= n - C.k:
        raise ValueError(f"t={t} outside 1..n-k={n - C.k}")
    cols = np.ascontiguousarray(C.G.T)
    anchors = list(range(n)) if anchors is None else list(anchors)
    nodes = [0]

    def search(size):
        def descend(count, nullity, cand_idx, resid):
            nodes[0] += 1
            if nodes[0] > node_cap:
                raise _SearchBudget
            if nullity >= t:
                return True
            if count == size or size - count < t - nullity:
                return False
            for pos in range(len(cand_idx)):
                if len(cand_idx) - pos < size - count:
                    break
                v = resid[pos]
                rest = resid[pos + 1:]
                if v.any():
                    p = int(np.flatnonzero(v)[0])
                    b = F.mul(v, F.inv(v[p]))
                    rest = F.sub(rest, F.mul(rest[:, p, None], b[None, :]))
                    ok = descend(count + 1, nullity, cand_idx[pos + 1:], rest)
                else:
                    ok = descend(count + 1, nullity + 1, cand_idx[pos + 1:], rest)
                if ok:
                    return True
            return False

        for a in anchors:
            others = np.array([i for i in range(n) if i != a], dtype=np.int64)
            v = cols[a]
            resid = cols[others]
            if v.any():
                p = int(np.flatnonzero(v)[0])
                b = F.mul(v, F.inv(v[p]))
                resid = F.sub(resid, F.mul(resid[:, p, None], b[None, :]))
                if descend(1, 0, others, resid):
                    return True
            elif descend(1, 1, others, resid):
                return True
        return False

    for size in range(t, n + 1):
        if search(size):
            return size
    raise AssertionError("no subset reached the requested nullity")


def weight_hierarchy(C: LinearCode, budget: int = 2_000_000) -> list[int]:
    return [generalized_hamming_weight(C, t, budget) for t in range(1, C.k + 1)]


def punctured_distance(C: LinearCode, R: Iterable[int], budget: int = DEFAULT_BUDGET) -> DistanceResult:
    return min_distance(puncture(C, R), budget)


def singleton_slack(C: LinearCode, d: int) -> int:
    return C.n - C.k + 1 - d


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)
