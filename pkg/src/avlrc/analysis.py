"""One-call parameter analysis of a constructed code, and table reproduction."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .ambient import GridSpec
from .evalcode import AffineVarietyCode, affine_variety_code
from .galois import make_tower
from .locality import (LocalityReport, automorphism_anchors, locality_report, make_orbit,
                       plain_locality, univariate_bounds)
from .metrics import DEFAULT_BUDGET, DistanceResult, dual_distance, min_distance
from .tables import Preset, get_preset


@dataclass(frozen=True)
class CodeAnalysis:
    code: AffineVarietyCode
    d: DistanceResult
    d_dual: DistanceResult | None
    report: LocalityReport

    def row(self) -> dict[str, object]:
        pair = self.report.r_delta
        return {
            "q": self.code.q,
            "n": self.code.n,
            "k": self.code.k,
            "d": self.d.value,
            "d_mode": "exact" if self.d.exact else "upper",
            "d_dual": self.d_dual.value if self.d_dual is not None and self.d_dual.exact else "-",
            "r": pair[0] if pair else (self.report.r_bound if self.report.r_bound is not None else "-"),
            "delta": pair[1] if pair else "-",
            "defect": self.report.defects.get("Ddelta", "-") if pair else "-",
        }


CSV_COLUMNS = ("q", "n", "k", "d", "d_mode", "d_dual", "r", "delta", "defect")


def analyze(avc: AffineVarietyCode, budget: int = DEFAULT_BUDGET, *, with_dual: bool = True,
            seed: int = 0, exact_max_k: int | None = None) -> CodeAnalysis:
    """Distance, dual distance and locality data for one code.

    Univariate codes supply proven lower bounds (consecutive-exponent
    arguments); the dual search uses r+1 orbit positions as a witness and
    the axis-scaling symmetry to fix one coordinate.
    """
    bounds = univariate_bounds(avc)
    d_lb, dd_lb = bounds if bounds else (None, None)
    if exact_max_k is not None and avc.k > exact_max_k:
        budget = 0
    d = min_distance(avc.code, budget, seed=seed, lower_bound=d_lb)
    dd = None
    if with_dual and avc.k < avc.n:
        r = plain_locality(avc.grid, avc.delta)
        witnesses = []
        if r is not None and avc.grid.L and r + 1 <= avc.q - 1:
            orb = make_orbit(avc.grid, avc.tower, avc.points, 0)
            witnesses.append(orb.positions[:r + 1])
        dd = dual_distance(avc.code, DEFAULT_BUDGET, lower_bound=dd_lb, witnesses=witnesses,
                           anchors=automorphism_anchors(avc), seed=seed)
    return CodeAnalysis(avc, d, dd, locality_report(avc, d.value, dd))


def preset_codes(preset: Preset) -> list[AffineVarietyCode]:
    tower = make_tower(preset.p, preset.s, preset.ell)
    grid = GridSpec(tower.q, tower.Q, preset.N, preset.J, preset.L)
    return [affine_variety_code(grid, tower, reps) for reps in preset.deltas]


def reproduce_table(table_id: int, budget: int = DEFAULT_BUDGET, *, exact_max_k: int | None = None,
                    seed: int = 0, with_dual: bool = True) -> list[CodeAnalysis]:
    preset = get_preset(table_id)
    return [analyze(avc, budget, seed=seed, exact_max_k=exact_max_k, with_dual=with_dual)
            for avc in preset_codes(preset)]


def format_csv(rows: Sequence[dict[str, object]]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    lines += [",".join(str(r[c]) for c in CSV_COLUMNS) for r in rows]
    return "\n".join(lines) + "\n"


def bivariate_alternatives(r: int, q_exp: tuple[int, int] = (2, 5), N2: int = 4,
                           budget: int = DEFAULT_BUDGET, seed: int = 0) -> list[dict[str, object]]:
    """Bivariate rivals to the univariate F_32 codes of the same length.

    Scope: q = Q = 32, N = (32, N2) with J = {both axes}, L = {first axis};
    Delta ranges over every union of cyclotomic sets of (a, b) with a < r
    and b < N2-1 that hits all r first coordinates, so (r, delta) matches
    the univariate code.  Returns one row per distinct dimension, keeping the
    largest distance found.
    """
    import itertools

    from .ambient import all_representatives, build_delta

    p, s = q_exp
    tower = make_tower(p, s, s)
    grid = GridSpec(tower.q, tower.Q, (tower.q, N2), {0, 1}, {0})
    reps = [a for a in all_representatives(grid) if a[0] < r]
    best: dict[int, dict[str, object]] = {}
    for size in range(r, len(reps) + 1):
        for choice in itertools.combinations(reps, size):
            if {a[0] for a in choice} != set(range(r)):
                continue
            avc = affine_variety_code(grid, tower, build_delta(grid, choice))
            d = min_distance(avc.code, budget, seed=seed)
            row = {"k": avc.k, "d": d.value, "d_mode": "exact" if d.exact else "upper",
                   "reps": " ".join(":".join(map(str, a)) for a in choice)}
            if avc.k not in best or d.value > best[avc.k]["d"]:
                best[avc.k] = row
    return [best[k] for k in sorted(best)]
