"""
Evaluation codes and their subfield-subcodes
============================================

Evaluate monomials at the zeros of the grid ideal over F_64, restrict to
F_8 with the trace basis, and compare against direct linear algebra.
"""

from avlrc.ambient import GridSpec, build_delta
from avlrc.codes import dual
from avlrc.evalcode import (affine_variety_code, build_evaluation_code, dual_delta, enumerate_points,
                            subfield_subcode_oracle)
from avlrc.galois import make_tower

T = make_tower(2, 3, 6)
g = GridSpec(8, 64, (8, 10), {0})
print("points:", len(enumerate_points(g, T)))

d1 = build_delta(g, [(1, 2), (2, 3)])
d2 = list(d1.elements) + [(1, 3)]
E1, E2 = build_evaluation_code(g, T, d1), build_evaluation_code(g, T, d2)
print("dim E_Delta1 =", E1.k, " dim E_Delta2 =", E2.k)

C1 = affine_variety_code(g, T, d1)
C2 = subfield_subcode_oracle(E2, T)
print("dim C_Delta1 =", C1.k, " dim C_Delta2 =", C2.k, " same code:", C1.code == C2)
print("trace basis vs oracle on Delta1:", subfield_subcode_oracle(E1, T) == C1.code)

# the dual of a univariate subfield-subcode is again one, with the negated complement
T9 = make_tower(3, 2, 4)
u = GridSpec(9, 81, (17,), {0}, {0})
delta = build_delta(u, [(0,), (1,)])
C = affine_variety_code(u, T9, delta)
dd = dual_delta(u, delta)
print("Delta =", delta.elements, " dual Delta reps =", dd.reps)
print("dual(C_Delta) == C_(dual Delta):", dual(C.code) == affine_variety_code(u, T9, dd).code)
