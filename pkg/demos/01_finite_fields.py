"""
Finite field arithmetic with integer-coded elements
===================================================

Build small fields F_q for odd prime powers q, poke at the element
encoding, and exercise the arithmetic and discrete-log tables that
every other layer of hypercount sits on.
"""

import numpy as np

from hypercount import build_field, dlog, trace_map

# A field context is built once per (p, e) and cached.  Elements are
# plain ints: the element sum(c_i x^i) is stored as the integer
# sum(c_i p^i), so for prime fields the code IS the residue.
f13 = build_field(13)
print("F_13:", "q =", f13.q, " generator =", f13.g)

# Arithmetic goes through table lookups, so it works elementwise on
# numpy arrays as well as on scalars.
xs = np.arange(1, 13)
print("3 * x for x in F_13* :", f13.mul(3, xs))
print("x + 11              :", f13.add(xs, 11))
print("x^(-1)              :", [f13.inv(int(x)) for x in xs])

# Every nonzero element is a power of the generator; dlog inverts that.
ks = np.array([dlog(f13, int(x)) for x in xs])
print("dlog table          :", ks)
print("g^dlog(x) == x      :", all(f13.pow_elem(f13.g, int(k)) == x for k, x in zip(ks, xs)))

# Extension fields use the first irreducible modulus in code order.
# For F_9 that is x^2 + 1, so the element code 3 (= x) squares to -1.
f9 = build_field(3, 2)
print("\nF_9:", "q =", f9.q, " generator =", f9.g)
print("x * x in F_9 :", f9.mul(3, 3), " (the code of -1 is", f9.neg(1), ")")

# The absolute trace maps F_q onto F_p and is q/p-to-1 on each fiber.
tr = np.array([trace_map(f9, u) for u in range(9)])
print("trace fibers :", np.bincount(tr), "(each value of F_3 hit q/p = 3 times)")

# one_minus_log gives dlog(1 - g^i) for every exponent i, the lookup
# that makes Jacobi sums and character binomials pure table arithmetic.
i = 2
gi = f9.pow_elem(f9.g, i)
print("1 - g^2 check:", f9.add(1, f9.neg(gi)) == f9.pow_elem(f9.g, int(f9.one_minus_log[i])))
