import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avlrc.codes import LinearCode, dual, puncture
from avlrc.galois import field
from avlrc.metrics import (DistanceResult, dual_distance, dual_generalized_weight, generalized_hamming_weight,
                           is_mds, min_distance, min_distance_bruteforce, shrink_to_circuit, subspace_count,
                           weight_hierarchy, worker_count)

from conftest import table_codes

FIELDS = [(2, 1), (2, 2), (3, 1), (2, 3), (5, 1)]


def rs_code(F, n, k):
    xs = [F.power_of_generator(i) for i in range(n)]
    G = np.array([[F.pow(x, j) for x in xs] for j in range(k)], dtype=np.int64)
    return LinearCode(F, G)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(1, 4), st.integers(5, 10), st.integers(0, 2**32 - 1))
def test_enumeration_matches_bruteforce(pn, k, n, seed):
    F = field(*pn)
    G = F.random(np.random.default_rng(seed), (k, n))
    C = LinearCode(F, G)
    if C.k == 0:
        return
    d = min_distance(C)
    assert d.exact and d.value == min_distance_bruteforce(C)
    assert d.witness is not None and len(d.witness) == d.value


def test_parallel_enumeration_agrees(monkeypatch):
    C = table_codes(2)[2].code
    monkeypatch.setenv("LRC_THREADS", "2")
    assert worker_count() == 2
    assert min_distance(C).value == min_distance(C, workers=1).value == 6


def test_worker_count_default(monkeypatch):
    monkeypatch.delenv("LRC_THREADS", raising=False)
    assert worker_count() == 1


def test_repetition_code():
    F = field(2, 3)
    C = LinearCode(F, [np.ones(21, dtype=np.int64)])
    assert min_distance(C).value == 21 and is_mds(C)


def test_table2_row1_exact():
    d = min_distance(table_codes(2)[0].code)
    assert (d.value, d.mode) == (8, "exact")
    assert str(d) == "8"


def test_table1_row4_search():
    d = min_distance(table_codes(1)[3].code, budget=0)
    assert d.value == 8
    assert not d.exact and str(d) == "<=8"


def test_lower_bound_certifies():
    d = min_distance(table_codes(1)[3].code, budget=0, lower_bound=8)
    assert d.exact and d.method == "search+bound"


def test_false_lower_bound_detected():
    with pytest.raises(AssertionError):
        min_distance(table_codes(1)[3].code, budget=0, lower_bound=9)


def test_zero_code_rejected():
    from avlrc.codes import zero_code
    with pytest.raises(ValueError):
        min_distance(zero_code(field(2, 1), 4))


def test_distance_result_str():
    assert str(DistanceResult(5, "upper_bound", 0)) == "<=5"


def test_dual_distances():
    assert dual_distance(table_codes(1)[0].code).value == 3
    res = dual_distance(table_codes(3)[5].code)
    assert res.exact and res.value == 8


@pytest.mark.parametrize("pn,n,k", [((3, 2), 8, 2), ((2, 3), 7, 3), ((5, 1), 4, 2)])
def test_mds_codes(pn, n, k):
    F = field(*pn)
    C = rs_code(F, n, k)
    assert is_mds(C)
    assert min_distance(dual(C)).value == k + 1
    assert dual_distance(C, budget=0).value == k + 1


def test_mds_puncture():
    C = rs_code(field(3, 2), 8, 2)
    P = puncture(C, range(7))
    assert (P.n, P.k, min_distance(P).value) == (7, 2, 6)


def test_not_mds():
    assert not is_mds(table_codes(2)[0].code)


def test_dual_distance_search_matches_enumeration(rng):
    F = field(2, 1)
    for _ in range(10):
        C = LinearCode(F, F.random(rng, (6, 14)))
        if C.k in (0, C.n):
            continue
        a = dual_distance(C)
        b = dual_distance(C, budget=0, node_cap=10**7)
        assert a.value == b.value and b.exact


def test_shrink_to_circuit():
    F = field(3, 1)
    G = np.array([[1, 0, 1, 0, 1], [0, 1, 1, 0, 0]])
    # column 3 is zero, so it alone is a circuit
    assert sorted(shrink_to_circuit(F, G, [0, 1, 2, 3, 4])) == [3]
    S = sorted(shrink_to_circuit(F, G, [0, 1, 2, 4]))
    assert S in ([0, 1, 2], [1, 2, 4])


def test_gaussian_binomial():
    assert subspace_count(2, 3, 1) == 7
    assert subspace_count(3, 4, 2) == 130


def test_ghw_mds():
    C = rs_code(field(3, 2), 8, 2)
    assert generalized_hamming_weight(C, 1) == 7
    assert generalized_hamming_weight(C, 2) == 8


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2)]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_weight_hierarchy_properties(pn, k, seed):
    F = field(*pn)
    C = LinearCode(F, F.random(np.random.default_rng(seed), (k, 8)))
    if C.k == 0:
        return
    h = weight_hierarchy(C)
    assert h[0] == min_distance(C).value
    assert all(a < b for a, b in zip(h, h[1:]))  # strict monotonicity
    assert h[-1] == int(np.count_nonzero(C.G.any(axis=0)))
    assert all(h[t - 1] <= C.n - C.k + t for t in range(1, C.k + 1))  # generalized Singleton


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1)]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_dual_generalized_weight_matches_enumeration(pn, k, seed):
    F = field(*pn)
    C = LinearCode(F, F.random(np.random.default_rng(seed), (k, 7)))
    if C.k in (0, C.n):
        return
    D = dual(C)
    for t in range(1, min(D.k, 3) + 1):
        assert dual_generalized_weight(C, t) == generalized_hamming_weight(D, t)
