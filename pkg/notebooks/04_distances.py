"""
Minimum distance, dual distance and weight hierarchies
======================================================

Small codes are enumerated exactly; larger ones are searched and labelled as
upper bounds unless a proven lower bound is met.
"""

from avlrc.analysis import preset_codes
from avlrc.locality import univariate_bounds
from avlrc.metrics import dual_distance, min_distance, min_distance_bruteforce, weight_hierarchy
from avlrc.tables import get_preset

codes = preset_codes(get_preset(1))   # q=8, length 21

C = codes[0]
d = min_distance(C.code)
print(f"[{C.n},{C.k}] code: d = {d} via {d.method}; brute force says {min_distance_bruteforce(C.code)}")
print("weight hierarchy:", weight_hierarchy(C.code))

big = codes[3]
searched = min_distance(big.code, budget=0)
print(f"[{big.n},{big.k}] code, searched only: d {searched} ({searched.mode})")
lb = univariate_bounds(big)
print("proven lower bounds (d, d_perp):", lb)
# the gap bound (5) is below the found weight (8), so the value stays an upper bound
certified = min_distance(big.code, budget=0, lower_bound=lb[0])
print("with the lower bound supplied: d =", certified, certified.mode)

# on a [20,9] code over F_11 the search reaches the proven bound and is exact
avc = preset_codes(get_preset(3))[4]
res = min_distance(avc.code, budget=0, lower_bound=univariate_bounds(avc)[0])
print(f"[{avc.n},{avc.k}] over F_11: d = {res} ({res.mode}, {res.method})")

for avc in codes:
    dd = dual_distance(avc.code, lower_bound=univariate_bounds(avc)[1])
    print(f"[{avc.n},{avc.k}]  d_perp = {dd} ({dd.method})")
