import itertools
import math

import numpy as np
import pytest

from avlrc.ambient import GridSpec, build_delta
from avlrc.codes import LinearCode
from avlrc.evalcode import affine_variety_code, enumerate_points
from avlrc.galois import field, make_tower
from avlrc.locality import (availability_count, check_extended_conditions, consecutive_classes, cyclic_run_bound,
                            cyclic_span_bound, extended_recovery_set, locality_pair, make_orbit, odd_q_univariate_params,
                            orbit_code, position_orbits, recover_extended, recover_mds_orbit, recover_vandermonde,
                            rt_chain, rt_exact, simulate_recovery, singleton_defects)
from avlrc.metrics import min_distance

from conftest import table_codes


def random_words(avc, rng, count):
    F = avc.tower.small
    return [avc.code.encode(F.random(rng, avc.k)) for _ in range(count)]


def test_orbit_on_worked_grid(f8_f64):
    grid = GridSpec(8, 64, (8, 10), {0}, {0})
    pts = enumerate_points(grid, f8_f64)
    for t0 in (0, 13, 69):
        orb = make_orbit(grid, f8_f64, pts, t0)
        assert len(orb) == 7 and orb.positions[0] == t0
        assert len({p[1] for p in orb.points}) == 1


def test_position_orbits_partition():
    for avc in (table_codes(2)[0], table_codes(6)[0], table_codes(11)[0]):
        orbs = position_orbits(avc)
        assert sorted(itertools.chain(*orbs)) == list(range(avc.n))
        assert all(len(o) == avc.q - 1 for o in orbs)


def test_vandermonde_roundtrip_all_basis_words():
    avc = table_codes(2)[0]
    for word in avc.code.G:
        for t0 in range(avc.n):
            orb = make_orbit(avc.grid, avc.tower, avc.points, t0)
            assert recover_vandermonde(avc, word, orb) == word[t0]


def test_vandermonde_with_other_neighbours(rng):
    avc = table_codes(1)[2]
    for word in random_words(avc, rng, 100):
        t0 = int(rng.integers(avc.n))
        orb = make_orbit(avc.grid, avc.tower, avc.points, t0)
        ns = sorted(rng.choice(np.arange(1, avc.q - 1), size=4, replace=False))
        assert recover_vandermonde(avc, word, orb, exponents=ns) == word[t0]


def test_vandermonde_rejects_bad_exponents():
    avc = table_codes(2)[0]
    orb = make_orbit(avc.grid, avc.tower, avc.points, 0)
    with pytest.raises(ValueError):
        recover_vandermonde(avc, avc.code.G[0], orb, exponents=[1, 1])


@pytest.mark.parametrize("table_id", [1, 2, 6, 7, 11])
def test_vandermonde_equals_mds_decoder(table_id, rng):
    for avc in table_codes(table_id):
        for word in random_words(avc, rng, 5):
            t0 = int(rng.integers(avc.n))
            orb = make_orbit(avc.grid, avc.tower, avc.points, t0)
            assert recover_vandermonde(avc, word, orb) == recover_mds_orbit(avc, word, [t0], orb)[t0] == word[t0]


@pytest.fixture(scope="module")
def extended_instance():
    T = make_tower(5, 1, 4)
    g = GridSpec(5, 625, (53,), {0}, {0})
    return affine_variety_code(g, T, [(2,), (3,), (4,), (13,)])


def test_extended_recovery(extended_instance, rng):
    avc = extended_instance
    assert check_extended_conditions(avc, (13,)) == 13
    for word in random_words(avc, rng, 100):
        t0 = int(rng.integers(avc.n))
        R = extended_recovery_set(avc, t0, (13,))
        assert t0 not in R and len(R) == (avc.q - 2) + 12
        damaged = word.copy()
        damaged[[i for i in range(avc.n) if i not in R]] = 0
        assert recover_extended(avc, damaged, t0, (13,)) == word[t0]


def test_extended_rejects_unit_exponent():
    T = make_tower(5, 1, 4)
    g = GridSpec(5, 625, (53,), {0}, {0})
    avc = affine_variety_code(g, T, [(1,), (2,), (3,), (4,)])
    with pytest.raises(ValueError, match="a_v must exceed 1"):
        check_extended_conditions(avc, (1,))


def test_extended_rejects_non_divisor(extended_instance):
    with pytest.raises(ValueError):
        check_extended_conditions(extended_instance, (3,))


def test_mds_orbit_erasures(rng):
    avc = table_codes(2)[0]
    orb = make_orbit(avc.grid, avc.tower, avc.points, 5)
    for word in random_words(avc, rng, 20):
        E = list(rng.choice(orb.positions, size=6, replace=False))
        damaged = word.copy()
        damaged[E] = 0
        rec = recover_mds_orbit(avc, damaged, E, orb)
        assert all(rec[p] == word[p] for p in E)
    assert recover_mds_orbit(avc, word, [], orb) == {}
    with pytest.raises(ValueError):
        recover_mds_orbit(avc, word, orb.positions[:7], orb)


def test_orbit_code_is_mds():
    avc = table_codes(2)[0]
    D = orbit_code(avc, make_orbit(avc.grid, avc.tower, avc.points, 0))
    assert (D.n, D.k, min_distance(D).value) == (8, 2, 7)


def test_locality_pairs():
    assert locality_pair(table_codes(2)[0].grid, table_codes(2)[0].delta) == (2, 7)
    assert locality_pair(table_codes(2)[5].grid, table_codes(2)[5].delta) == (7, 2)
    avc = table_codes(9)[-1]
    assert locality_pair(avc.grid, avc.delta) == (12, 15)


def test_locality_pair_rejects_gaps():
    avc = table_codes(2)[0]
    bad = build_delta(avc.grid, [(0,), (2,)])
    with pytest.raises(ValueError):
        locality_pair(avc.grid, bad)


def test_consecutive_classes():
    assert consecutive_classes([9, 10, 11, 12], 10)
    assert consecutive_classes([0, 1, 2], 8)
    assert not consecutive_classes([0, 2], 8)


def test_singleton_defects_examples():
    assert singleton_defects(16, 3, 8, 2, 7)["Ddelta"] == 0
    assert singleton_defects(21, 6, 12, 4, 4)["Ddelta"] == 1
    assert singleton_defects(21, 10, 8, 6, 2)["D1"] == 3
    D = singleton_defects(21, 6, 12, 4, 4, {1: 4, 2: 5, 3: 6})["Dt"]
    assert D[3] == 21 + 4 - 12 - 6 - 2 * 3


def test_rt_chain():
    assert rt_chain(4, 4) == {1: 4, 2: 5, 3: 6}


def test_rt_exact_mds():
    F = field(3, 2)
    xs = [F.power_of_generator(i) for i in range(8)]
    C = LinearCode(F, [[F.pow(x, j) for x in xs] for j in range(2)])
    assert rt_exact(C, 1) == 2
    assert rt_exact(C, 3) == 4
    with pytest.raises(ValueError):
        rt_exact(C, 7)


def test_availability():
    assert availability_count(8, 2) == 21
    assert availability_count(8, 7) == 1


def test_every_pair_is_a_recovery_set(rng):
    avc = table_codes(2)[0]
    orb = make_orbit(avc.grid, avc.tower, avc.points, 0)
    word = random_words(avc, rng, 1)[0]
    others = orb.positions[1:]
    count = 0
    for R in itertools.combinations(others, 2):
        erased = [p for p in orb.positions if p not in R]
        rec = recover_mds_orbit(avc, word, erased, orb)
        assert rec[orb.positions[0]] == word[orb.positions[0]]
        count += 1
    assert count == availability_count(8, 2)


ODD_Q = [(3, 2, 4), (11, 1, 2), (5, 2, 4), (3, 3, 6)]


@pytest.mark.parametrize("p,s,ell", ODD_Q)
def test_odd_q_closed_forms(p, s, ell):
    T = make_tower(p, s, ell)
    q = T.q
    g = GridSpec(q, T.Q, (2 * (q - 1) + 1,), {0}, {0})
    for r in range(2, min(10, q - 2) + 1):
        avc = affine_variety_code(g, T, [(a,) for a in range(r)])
        n, k, d, defect = odd_q_univariate_params(q, r)
        assert (avc.n, avc.k) == (n, k)
        if q**k <= 200_000:
            assert min_distance(avc.code).value >= d
        assert locality_pair(g, avc.delta) == (r, q - r)
        # the bound is met by the data: defect with d = closed form equals the stated value
        assert singleton_defects(n, k, d, r, q - r)["Ddelta"] == defect


def test_odd_q_small_examples():
    assert odd_q_univariate_params(9, 2) == (16, 3, 8, 0)
    assert odd_q_univariate_params(11, 4)[:3] == (20, 6, 8)
    assert odd_q_univariate_params(25, 7)[:3] == (48, 10, 20)
    with pytest.raises(ValueError):
        odd_q_univariate_params(8, 2)


def test_cyclic_bounds():
    assert cyclic_run_bound(16, [0, 1, 9]) == 3
    assert cyclic_run_bound(16, [15, 0, 1]) == 4
    assert cyclic_span_bound(16, [0, 1, 9]) == 8
    assert cyclic_span_bound(21, [0]) == 21


def test_cyclic_code_is_sharp():
    # binary [7,4] Hamming code, cyclic: locality 3 and dual distance 4
    F = field(2, 1)
    g = [1, 1, 0, 1, 0, 0, 0]
    C = LinearCode(F, [np.roll(g, i) for i in range(4)])
    from avlrc.metrics import dual_distance
    assert rt_exact(C, 1) == dual_distance(C).value - 1 == 3


def test_simulation_deterministic_and_bounded():
    avc = table_codes(2)[0]
    a = simulate_recovery(avc, 50, 6, seed=7)
    b = simulate_recovery(avc, 50, 6, seed=7)
    assert a == b and a.successes == 50 and a.mean_read == 2
    assert simulate_recovery(avc, 10, 0, seed=1).successes == 10
    with pytest.raises(ValueError):
        simulate_recovery(avc, 10, 7, seed=1)


def test_simulation_bivariate():
    s = simulate_recovery(table_codes(6)[0], 1000, 7, seed=3)
    assert s.successes == 1000


def test_binomial_helper():
    assert math.comb(7, 2) == availability_count(8, 2)
