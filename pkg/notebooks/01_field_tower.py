"""
A field and its subfield
========================

Build F_64 with F_8 sitting inside it, then check the embedding, the
Frobenius map and the relative trace.
"""

import numpy as np

from avlrc.galois import Felt, make_tower, relative_trace

T = make_tower(2, 3, 6)   # F_8 inside F_64
print(T.small, "inside", T.big)
print("modulus of F_64 (low to high):", T.big.modulus)

# the image of F_8 is exactly the set fixed by x -> x^8
x = T.big.elements()
fixed = x[T.big.pow(x, 8) == x]
print("fixed points of x^8:", sorted(fixed.tolist()))
print("image of F_8:       ", sorted(T.embed(T.small.elements()).tolist()))

# generators: alpha for F_64, eta for F_8, gamma of order 7 inside F_64
print("alpha order:", T.big.mult_order(T.alpha))
gamma = T.big.power_of_generator(63 // 7)
print("gamma = alpha^9 has order", T.big.mult_order(gamma))

# the relative trace F_64 -> F_8 lands in F_8
t = relative_trace(T, Felt(T.alpha, "Q"), 2).value
print("Tr(alpha) =", t, "in F_8:", bool(T.in_subfield(t)), "-> as an F_8 element:", int(T.restrict(t)))

rng = np.random.default_rng(0)
a, b = T.big.random(rng, 2)
print("a*b/b == a:", T.big.div(T.big.mul(a, b), b) == a)
