"""
Cyclotomic sets on a grid of exponents
======================================

The grid q=8, Q=64, N=(8,10), J={first axis}.  Exponents in the first axis
live in Z/7, those in the second in {0, 1, ..., 9} with the non-J rule.
"""

from avlrc.ambient import GridSpec, all_representatives, build_delta, closure, cyclotomic_orbit, is_closed

g = GridSpec(8, 64, (8, 10), {0}, {0})
print("T =", g.T, " grid size", g.size, " code length", g.length)

for a in [(1, 2), (2, 3), (2, 6), (0, 0), (3, 9)]:
    o = cyclotomic_orbit(g, a)
    print(f"orbit of {a}: {o.elements}  representative {o.representative}")

reps = all_representatives(g)
print(len(reps), "cyclotomic sets partition the", g.size, "exponents")

d1 = build_delta(g, [(1, 2), (2, 3)])
d2 = list(d1.elements) + [(1, 3)]
print("Delta1 =", d1.elements, "closed:", is_closed(g, d1.elements))
print("Delta2 =", tuple(d2), "closed:", is_closed(g, d2))
print("closure of Delta2 =", closure(g, d2).elements)
