"""
Multiplicative characters, Gauss sums, and character binomials
==============================================================

Characters of F_q* are indexed by an exponent k mod q-1; the character
T^k sends the generator g to a fixed primitive (q-1)-th root of unity
raised to the k-th power.  Gauss and Jacobi sums over them can be
evaluated in two interchangeable backends: complex floats, or residues
modulo a large prime that contains the needed roots of unity exactly.
"""

from hypercount import (
    binom,
    build_field,
    char_of_order,
    eval_char,
    gauss_sum,
    get_ring,
    jacobi_sum,
    quadratic_char,
    trivial_char,
)

f13 = build_field(13)

# The quadratic character phi = T^((q-1)/2) detects squares; by the
# standing convention every character vanishes at 0.
phi = quadratic_char(f13)
print("phi on F_13:", [int(eval_char(phi, x).lift_int()) for x in range(13)])

# char_of_order(ctx, n) picks the canonical character of exact order n.
chi4 = char_of_order(f13, 4)
print("chi4 index:", chi4.index, " bar(chi4) index:", chi4.bar().index)

# Gauss sums are genuinely complex; with the float backend we can see
# the classical |G(chi)|^2 = q on every nontrivial character.
ring_f = get_ring(f13, "float")
G = gauss_sum(chi4, ring_f)
print("G(chi4) =", G.payload, " |G|^2 =", abs(G.payload) ** 2)

# The exact backend stores the same quantity as a residue mod a prime
# ell chosen so that p-th and (q-1)-th roots of unity both exist.
ring_e = get_ring(f13, "exact")
print("exact backend: ell =", ring_e.ell, " G(chi4) =", gauss_sum(chi4, ring_e).payload)

# Jacobi sums tie the two together: J(A, B) * G(AB) = G(A) * G(B)
# whenever AB is nontrivial.
J = jacobi_sum(chi4, phi, ring_f)
lhs = J.payload * gauss_sum(chi4 * phi, ring_f).payload
rhs = gauss_sum(chi4, ring_f).payload * gauss_sum(phi, ring_f).payload
print("J(chi4, phi) * G(chi4*phi) == G(chi4) * G(phi):", abs(lhs - rhs) < 1e-9)

# The normalized binomial coefficient binom(A, B) = B(-1)/q * J(A, bar B)
# is the basic coefficient of the hypergeometric layer.  Integer-valued
# combinations lift back to exact ints in either backend.
b_f = binom(chi4, phi, ring_f)
b_e = binom(chi4, phi, ring_e)
print("binom(chi4, phi):", b_f.payload, " exact residue:", b_e.payload)
print("q^2 * |binom|^2 as an integer:", round(abs(b_f.payload) ** 2 * 13**2))

# Against the trivial character the binomial collapses to simple values.
eps = trivial_char(f13)
print("binom(eps, eps) = -1/q + (q-1)/q:", binom(eps, eps, ring_f).payload)
