"""Built-in presets for the published parameter tables, with their expected rows.

Each preset lists the tower, the grid and the defining sets in the order the
rows appear.  ``expected`` holds (n, k, d, d_perp, r, delta, defect) with
d_perp None where the published table omits it.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Preset:
    table_id: int
    title: str
    source: str
    p: int
    s: int
    ell: int
    N: tuple[int, ...]
    J: frozenset[int]
    L: frozenset[int]
    deltas: tuple[tuple[tuple[int, ...], ...], ...]
    expected: tuple[tuple[int, int, int, int | None, int, int, int], ...]

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def Q(self) -> int:
        return self.p**self.ell


def _univariate(r_values, reps_in_order):
    return tuple(tuple((a,) for a in reps_in_order[:r]) for r in r_values)


def _successive(base, additions):
    out, cur = [], list(base)
    out.append(tuple(cur))
    for add in additions:
        cur = cur + list(add)
        out.append(tuple(cur))
    return tuple(out)


# univariate: the r smallest representatives 0, 1, ..., r-1 (all of them are
# representatives for these grids)
PRESETS: dict[int, Preset] = {}


def _add(preset: Preset):
    PRESETS[preset.table_id] = preset


_add(Preset(
    1, "Univariate LRC codes over F_8", "q=8, Q=64, N_1=22, Delta = first r representatives, r = 2,3,4,6",
    2, 3, 6, (22,), frozenset({0}), frozenset({0}),
    _univariate([2, 3, 4, 6], range(6)),
    ((21, 3, 14, 3, 2, 6, 0), (21, 5, 12, 4, 3, 5, 1), (21, 6, 12, 5, 4, 4, 1), (21, 10, 8, 7, 6, 2, 3)),
))
_add(Preset(
    2, "Univariate LRC codes over F_9", "q=9, Q=81, N_1=17, Delta = first r representatives, r = 2..7",
    3, 2, 4, (17,), frozenset({0}), frozenset({0}),
    _univariate(range(2, 8), range(7)),
    ((16, 3, 8, 3, 2, 7, 0), (16, 4, 8, 4, 3, 6, 0), (16, 6, 6, 5, 4, 5, 1),
     (16, 7, 6, 6, 5, 4, 1), (16, 9, 4, 7, 6, 3, 2), (16, 10, 4, 8, 7, 2, 2)),
))
_add(Preset(
    3, "Univariate LRC codes over F_11", "q=11, Q=121, N_1=21, Delta = first r representatives, r = 2..7",
    11, 1, 2, (21,), frozenset({0}), frozenset({0}),
    _univariate(range(2, 8), range(7)),
    ((20, 3, 10, 3, 2, 9, 0), (20, 5, 10, 4, 3, 8, 0), (20, 6, 8, 5, 4, 7, 1),
     (20, 7, 8, 6, 5, 6, 1), (20, 9, 6, 7, 6, 5, 2), (20, 10, 6, 8, 7, 4, 2)),
))
_add(Preset(
    4, "Univariate LRC codes over F_25", "q=25, Q=625, N_1=49, Delta = first r representatives, r = 2..7",
    5, 2, 4, (49,), frozenset({0}), frozenset({0}),
    _univariate(range(2, 8), range(7)),
    ((48, 3, 24, 3, 2, 23, 0), (48, 4, 24, 4, 3, 22, 0), (48, 6, 22, 5, 4, 21, 1),
     (48, 7, 22, 6, 5, 20, 1), (48, 9, 20, 7, 6, 19, 2), (48, 10, 20, 8, 7, 18, 2)),
))
_add(Preset(
    5, "Univariate LRC codes over F_27", "q=27, Q=729, N_1=53, Delta = first r representatives, r = 2..7",
    3, 3, 6, (53,), frozenset({0}), frozenset({0}),
    _univariate(range(2, 8), range(7)),
    ((52, 3, 26, 3, 2, 25, 0), (52, 4, 26, 4, 3, 24, 0), (52, 6, 24, 5, 4, 23, 1),
     (52, 7, 24, 6, 5, 22, 1), (52, 9, 22, 7, 6, 21, 2), (52, 10, 22, 8, 7, 20, 2)),
))
_add(Preset(
    6, "Bivariate LRC codes over F_11",
    "q=Q=N_1=11, N_2=3; I(0,0) u I(0,1) u I(1,0) u I(2,0), then add I(3,0); I(4,0); I(5,0); "
    "I(1,1) u I(6,0); I(7,1)",
    11, 1, 1, (11, 3), frozenset({0, 1}), frozenset({0}),
    _successive([(0, 0), (0, 1), (1, 0), (2, 0)], [[(3, 0)], [(4, 0)], [(5, 0)], [(1, 1), (6, 0)], [(7, 1)]]),
    ((20, 4, 10, 4, 3, 8, 0), (20, 5, 10, 4, 4, 7, 0), (20, 6, 10, 4, 5, 6, 0),
     (20, 7, 10, 4, 6, 5, 0), (20, 9, 8, 6, 7, 4, 1), (20, 10, 8, 8, 8, 3, 1)),
))
_add(Preset(
    7, "Bivariate LRC codes over F_16",
    "q=Q=N_1=16, N_2=4; I(0,0) u I(0,1) u I(1,1) u I(2,0) u I(3,0), then add I(4,0); I(5,0); I(4,1) u I(6,1)",
    2, 4, 4, (16, 4), frozenset({0, 1}), frozenset({0}),
    _successive([(0, 0), (0, 1), (1, 1), (2, 0), (3, 0)], [[(4, 0)], [(5, 0)], [(4, 1), (6, 1)]]),
    ((45, 5, 30, 3, 4, 12, 0), (45, 6, 30, 3, 5, 11, 0), (45, 7, 30, 3, 6, 10, 0), (45, 9, 28, 3, 7, 9, 1)),
))
_add(Preset(
    8, "Bivariate LRC codes over F_25",
    "q=Q=N_1=25, N_2=3; I(0,0) u I(0,1) u I(1,0) u I(1,1) u I(2,0), then add I(3,0), ..., I(9,0) one at a time",
    5, 2, 2, (25, 3), frozenset({0, 1}), frozenset({0}),
    _successive([(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)], [[(a, 0)] for a in range(3, 10)]),
    tuple((48, k, 23, None, k - 2, 27 - k, 0) for k in range(5, 13)),
))
_add(Preset(
    9, "Bivariate LRC codes over F_27",
    "q=Q=N_1=27, N_2=3; I(0,0) u I(0,1) u I(1,0) u I(1,1) u I(2,0) u I(3,0), then add I(4,0), ..., I(11,0) "
    "one at a time (the table lists a row for I(10,0) before I(11,0))",
    3, 3, 3, (27, 3), frozenset({0, 1}), frozenset({0}),
    _successive([(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (3, 0)], [[(a, 0)] for a in range(4, 12)]),
    tuple((52, k, 25, None, k - 2, 29 - k, 0) for k in range(6, 15)),
))
_add(Preset(
    10, "Univariate LRC codes over F_32", "q=32, Q=1024, N_1=94, Delta = first r representatives, r = 2,3,4",
    2, 5, 10, (94,), frozenset({0}), frozenset({0}),
    _univariate([2, 3, 4], range(4)),
    ((93, 3, 62, 3, 2, 30, 0), (93, 5, 60, 4, 3, 29, 1), (93, 6, 60, 5, 4, 28, 1)),
))
_add(Preset(
    11, "Bivariate LRC codes over F_8",
    "q=8, Q=4096, N_1=8, N_2=6; I(0,1), then add I(1,1), then I(2,1)",
    2, 3, 12, (8, 6), frozenset({0, 1}), frozenset({0}),
    _successive([(0, 1)], [[(1, 1)], [(2, 1)]]),
    ((35, 4, 14, 2, 1, 7, 0), (35, 8, 12, 3, 2, 6, 1), (35, 12, 10, 4, 3, 5, 2)),
))


def get_preset(table_id: int) -> Preset:
    try:
        return PRESETS[table_id]
    except KeyError:
        raise ValueError(f"unknown table id {table_id}; known ids are {sorted(PRESETS)}") from None
