import numpy as np
import pytest

from avlrc.ambient import GridSpec, build_delta, closure
from avlrc.codes import LinearCode, dual
from avlrc.evalcode import (affine_variety_code, axis_automorphisms, build_evaluation_code, build_subfield_subcode,
                            dual_delta, enumerate_points, evaluate, monomial_vector, subfield_subcode_oracle,
                            trace_basis)
from avlrc.galois import make_tower

from conftest import table_codes


def test_worked_example_point_count(f8_f64, worked_grid):
    pts = enumerate_points(worked_grid, f8_f64)
    assert len(pts) == worked_grid.length == 70
    assert len({tuple(p) for p in pts.points}) == 70


@pytest.mark.parametrize("p,s,ell,N,n", [(3, 2, 4, 17, 16), (2, 3, 3, 8, 7), (11, 1, 1, 11, 10)])
def test_univariate_point_count(p, s, ell, N, n):
    T = make_tower(p, s, ell)
    assert len(enumerate_points(GridSpec(T.q, T.Q, (N,), {0}), T)) == n


def test_points_are_zeros_of_ideal(f8_f64, worked_grid):
    F = f8_f64.big
    pts = enumerate_points(worked_grid, f8_f64).points
    assert np.all(F.pow(pts[:, 0], 7) == 1)
    x2 = pts[:, 1]
    assert np.all(F.mul(x2, F.sub(F.pow(x2, 9), 1)) == 0)


def test_constant_monomial_is_all_ones(f8_f64, worked_grid):
    pts = enumerate_points(worked_grid, f8_f64)
    assert np.all(monomial_vector(f8_f64, pts, (0, 0)) == 1)


def test_trace_lands_in_subfield(f8_f64, worked_grid):
    pts = enumerate_points(worked_grid, f8_f64)
    v = evaluate(f8_f64, {(1, 2): 1}, pts)
    t = f8_f64.trace(v, 2)
    assert len(t) == 70
    assert np.array_equal(f8_f64.big.pow(t, 8), t)


def test_worked_example_dimensions(f8_f64, worked_grid, worked_deltas):
    d1, d2 = worked_deltas
    assert build_evaluation_code(worked_grid, f8_f64, d1).k == 4
    assert build_evaluation_code(worked_grid, f8_f64, d2).k == 5
    C1 = affine_variety_code(worked_grid, f8_f64, d1)
    assert (C1.n, C1.k) == (70, 4)
    # the subfield-subcode of E_Delta2 itself, not of its closure
    C2 = subfield_subcode_oracle(build_evaluation_code(worked_grid, f8_f64, d2), f8_f64)
    assert C2.k == 4 and C1.code == C2


def test_closure_of_worked_delta2_is_larger(f8_f64, worked_grid, worked_deltas):
    closed = closure(worked_grid, worked_deltas[1])
    assert len(closed) == 6
    assert affine_variety_code(worked_grid, f8_f64, closed).k == 6


def test_non_closed_delta_rejected(f8_f64, worked_grid, worked_deltas):
    from avlrc.ambient import CyclotomicSet, DeltaSet
    bad = DeltaSet(worked_grid, (CyclotomicSet((1, 3), ((1, 3),)),))
    with pytest.raises(ValueError):
        build_subfield_subcode(worked_grid, f8_f64, bad)


def test_oracle_matches_trace_construction(f8_f64, worked_grid, worked_deltas):
    d1, d2 = worked_deltas
    E1 = build_evaluation_code(worked_grid, f8_f64, d1)
    E2 = build_evaluation_code(worked_grid, f8_f64, d2)
    C = affine_variety_code(worked_grid, f8_f64, d1).code
    assert subfield_subcode_oracle(E1, f8_f64) == C
    assert subfield_subcode_oracle(E2, f8_f64) == C


def test_oracle_of_zero_code(f8_f64):
    from avlrc.codes import zero_code
    assert subfield_subcode_oracle(zero_code(f8_f64.big, 6), f8_f64).k == 0


def test_constant_code():
    T = make_tower(2, 3, 6)
    g = GridSpec(8, 64, (22,), {0})
    avc = affine_variety_code(g, T, [(0,)])
    assert (avc.n, avc.k) == (21, 1)
    assert np.all(avc.code.G == 1)


def test_trace_basis_blocks(f8_f64, worked_grid, worked_deltas):
    basis = trace_basis(worked_grid, f8_f64, worked_deltas[0])
    assert basis.block((1, 2)).shape == (2, 70)
    assert basis.rows.shape == (4, 70)


def test_table2_first_code_dimension():
    avc = table_codes(2)[0]
    assert (avc.n, avc.k) == (16, 3)


def _closed_deltas(grid, rng, count):
    from avlrc.ambient import all_representatives
    reps = all_representatives(grid)
    for _ in range(count):
        size = int(rng.integers(1, len(reps)))
        pick = rng.choice(len(reps), size=size, replace=False)
        yield build_delta(grid, [reps[i] for i in pick])


@pytest.mark.parametrize("p,s,ell,N", [(2, 3, 6, 22), (3, 2, 4, 17), (2, 3, 3, 8), (3, 2, 2, 9)])
def test_oracle_on_random_deltas(p, s, ell, N, rng):
    T = make_tower(p, s, ell)
    g = GridSpec(T.q, T.Q, (N,), {0})
    for delta in _closed_deltas(g, rng, 4):
        C, _ = build_subfield_subcode(g, T, delta)
        assert C.k == len(delta)
        assert subfield_subcode_oracle(build_evaluation_code(g, T, delta), T) == C


@pytest.mark.parametrize("p,s,ell,N", [(2, 3, 6, 22), (3, 2, 4, 17), (2, 3, 3, 8), (3, 2, 2, 9)])
def test_dual_defining_set(p, s, ell, N, rng):
    T = make_tower(p, s, ell)
    g = GridSpec(T.q, T.Q, (N,), {0})
    for delta in _closed_deltas(g, rng, 4):
        C = affine_variety_code(g, T, delta).code
        Cp = affine_variety_code(g, T, dual_delta(g, delta)).code
        assert dual(C) == Cp
        # Delsarte: dual of the subfield-subcode is the trace code of the dual evaluation code
        E = build_evaluation_code(g, T, delta)
        F = T.big
        scaled = [F.mul(F.power_of_generator(i), dual(E).G) for i in range(T.extension_degree)]
        trace_rows = T.restrict(T.trace(np.concatenate(scaled)))
        assert LinearCode(T.small, trace_rows, n=C.n) == dual(C)


def test_dual_delta_table2_row1():
    avc = table_codes(2)[0]
    dd = dual_delta(avc.grid, avc.delta)
    assert (15,) not in dd.elements and (16,) not in dd.elements
    # the longest run of consecutive exponents, 8..14, meets 7 cyclotomic sets
    run = set(range(8, 15))
    assert run <= {e[0] for e in dd.elements}
    assert len([o for o in dd.orbits if run & {e[0] for e in o.elements}]) == 7
    with pytest.raises(ValueError):
        dual_delta(GridSpec(8, 64, (8, 10), {0}), avc.delta)


def test_axis_automorphisms_preserve_code():
    for avc in (table_codes(1)[2], table_codes(6)[0]):
        for perm in axis_automorphisms(avc.grid, avc.tower, avc.points):
            assert sorted(perm) == list(range(avc.n))
            assert all(avc.code.contains(row[perm]) for row in avc.code.G)


def test_random_grids_length(rng):
    for _ in range(20):
        T = make_tower(3, 1, 4)
        Ns = [d + 1 for d in (2, 4, 5, 8, 10, 16, 20, 40, 80)]
        m = int(rng.integers(1, 3))
        N = tuple(int(rng.choice(Ns)) for _ in range(m))
        J = {j for j in range(m) if rng.random() < 0.5}
        g = GridSpec(3, 81, N, J)
        expect = np.prod([n - 1 if j in J else n for j, n in enumerate(N)])
        assert g.length == len(enumerate_points(g, T)) == expect
