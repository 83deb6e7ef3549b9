import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avlrc.ambient import (GridSpec, all_representatives, axis_mul, build_delta, closure, cyclotomic_orbit,
                           find_representative, is_closed, scale, sigma_L)


def test_axis_mul_examples(worked_grid):
    assert axis_mul(worked_grid, 0, 8, 1) == 1
    assert axis_mul(worked_grid, 1, 8, 2) == 7
    assert axis_mul(worked_grid, 1, 123, 0) == 0
    with pytest.raises(ValueError):
        axis_mul(worked_grid, 0, 8, 7)


def test_non_j_residue_zero_maps_to_top(worked_grid):
    # T_2 = 9: 3*3 = 9 = 0 mod 9, which is represented by 9
    assert axis_mul(worked_grid, 1, 3, 3) == 9


def test_worked_orbits(worked_grid):
    o = cyclotomic_orbit(worked_grid, (1, 2))
    assert o.elements == ((1, 2), (1, 7)) and o.size == 2
    assert cyclotomic_orbit(worked_grid, (2, 6)).representative == (2, 3)
    assert cyclotomic_orbit(worked_grid, (1, 6)).representative == (1, 3)
    assert cyclotomic_orbit(worked_grid, (0, 0)).elements == ((0, 0),)


def test_univariate_q9_orbit():
    g = GridSpec(9, 81, (17,), {0})
    assert set(cyclotomic_orbit(g, (1,)).elements) == {(1,), (9,)}


def test_find_representative():
    assert find_representative([(2, 6), (2, 3)]) == (2, 3)
    assert find_representative([(1, 6), (1, 3)]) == (1, 3)
    assert find_representative([(0, 0)]) == (0, 0)


def test_sigma_L():
    g = GridSpec(8, 64, (8, 10), {0, 1} - {1}, {0})
    assert sigma_L(g, (2, 3)) == 2
    g2 = GridSpec(16, 16, (16, 4), {0, 1}, {0, 1} - {1})
    assert sigma_L(g2, (0, 1)) == 0
    g3 = GridSpec(4, 16, (16, 4), {0, 1}, {0, 1})
    assert sigma_L(g3, (2, 3)) == 5


def test_grid_validation():
    with pytest.raises(ValueError):
        GridSpec(9, 81, (18,), {0})        # 17 does not divide 80
    with pytest.raises(ValueError):
        GridSpec(9, 81, (17,), set(), {0})  # L not inside J
    with pytest.raises(ValueError):
        GridSpec(9, 81, (11,), {0}, {0})    # q-1=8 does not divide 10
    with pytest.raises(ValueError):
        GridSpec(9, 81, (1,), {0})


def test_build_delta_worked(worked_grid):
    d1 = build_delta(worked_grid, [(1, 2), (2, 3)])
    assert len(d1) == 4
    d = build_delta(worked_grid, [(1, 2), (2, 3), (1, 3)])
    assert len(d) == 6
    with pytest.raises(ValueError):
        build_delta(worked_grid, [])


def test_build_delta_merges_duplicates(worked_grid, caplog):
    d = build_delta(worked_grid, [(1, 2), (1, 7)])
    assert d.reps == ((1, 2),)
    assert "more than once" in caplog.text


def test_is_closed(worked_grid, worked_deltas):
    d1, d2 = worked_deltas
    assert is_closed(worked_grid, d1.elements)
    assert not is_closed(worked_grid, d2)
    assert is_closed(worked_grid, worked_grid.exponents())
    assert set(closure(worked_grid, d2).elements) == set(d2) | {(1, 6)}


GRIDS = [
    GridSpec(8, 64, (8, 10), {0}),
    GridSpec(9, 81, (17,), {0}),
    GridSpec(11, 11, (11, 3), {0, 1}, {0}),
    GridSpec(4, 16, (6, 4), {1}),
    GridSpec(8, 4096, (8, 6), {0, 1}, {0}),
    GridSpec(3, 81, (5, 9, 3), {0, 2}),
]


@pytest.mark.parametrize("g", GRIDS)
def test_representatives_partition_grid(g):
    reps = all_representatives(g)
    sizes = [cyclotomic_orbit(g, a).size for a in reps]
    assert sum(sizes) == g.size == math.prod(t + 1 for t in g.T)
    covered = set()
    for a in reps:
        els = set(cyclotomic_orbit(g, a).elements)
        assert not els & covered
        covered |= els
    assert len(covered) == g.size


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(GRIDS), st.data())
def test_orbit_invariants(g, data):
    a = tuple(data.draw(st.integers(0, t)) for t in g.T)
    o = cyclotomic_orbit(g, a)
    assert a in o
    assert set(cyclotomic_orbit(g, scale(g, a, g.q)).elements) == set(o.elements)
    assert scale(g, o.elements[-1], g.q) == o.representative
    rep = find_representative(o.elements)
    assert rep == o.representative == find_representative([rep])
    assert all(rep <= e for e in o.elements)
