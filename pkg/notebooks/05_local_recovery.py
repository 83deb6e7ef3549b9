"""
Local recovery inside an orbit
==============================

Every coordinate of these codes lies on an orbit of q-1 points.  The orbit
code is MDS, so a lost symbol comes back from r orbit neighbours, and up to
delta-1 losses in one orbit can be filled.
"""

import numpy as np

from avlrc.ambient import GridSpec
from avlrc.analysis import preset_codes
from avlrc.evalcode import affine_variety_code
from avlrc.galois import make_tower
from avlrc.locality import (extended_recovery_set, locality_pair, make_orbit, orbit_code, recover_extended,
                            recover_mds_orbit, recover_vandermonde, simulate_recovery)
from avlrc.metrics import min_distance
from avlrc.tables import get_preset

rng = np.random.default_rng(1)
avc = preset_codes(get_preset(2))[0]      # [16,3,8] over F_9
r, delta = locality_pair(avc.grid, avc.delta)
print(f"[{avc.n},{avc.k}] over F_{avc.q}: (r, delta) = ({r}, {delta})")

word = avc.code.encode(avc.tower.small.random(rng, avc.k))
orb = make_orbit(avc.grid, avc.tower, avc.points, 3)
D = orbit_code(avc, orb)
print("orbit positions:", orb.positions, " orbit code:", (D.n, D.k, min_distance(D).value))

print("symbol 3:", word[3], " from two neighbours:", recover_vandermonde(avc, word, orb))

lost = list(orb.positions[:delta - 1])
damaged = word.copy()
damaged[lost] = 0
print(f"{len(lost)} erasures filled correctly:",
      all(v == word[p] for p, v in recover_mds_orbit(avc, damaged, lost, orb).items()))

print(simulate_recovery(avc, 1000, delta - 1, seed=7))

# a code with q-1 sigma classes: one class is isolated by a sum over a subgroup
T = make_tower(5, 1, 4)
ext = affine_variety_code(GridSpec(5, 625, (53,), {0}, {0}), T, [(2,), (3,), (4,), (13,)])
w = ext.code.encode(T.small.random(rng, ext.k))
R = extended_recovery_set(ext, 0, (13,))
print(f"[{ext.n},{ext.k}] over F_5: recovery set of size {len(R)};",
      "recovered:", recover_extended(ext, w, 0, (13,)) == w[0])
