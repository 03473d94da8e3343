"""
Frobenius traces for two cubic Weierstrass shapes
=================================================

For y^2 = x^3 + ax + b (when 12 | q - 1) and y^2 = x^3 + ax^2 + b (when
6 | q - 1) the trace of Frobenius comes out of a single hypergeometric
evaluation.  The trace equals q minus the affine count, and when the
curve is nonsingular it obeys the Hasse bound |t| <= 2 sqrt(q).
"""

from hypercount import (
    CurveParams,
    brute_count,
    build_field,
    cubic_discriminant_linear,
    cubic_discriminant_quadratic,
    get_ring,
    hasse_bound,
    trace_frobenius_linear,
    trace_frobenius_quadratic,
)

# q = 37 satisfies 12 | 36, so the x^3 + ax + b trace applies.
f37 = build_field(37)
print("q=37, y^2 = x^3 + ax + b")
print(f"  {'a':>3} {'b':>3} {'trace':>6} {'deficit':>8} {'disc':>5}")
for a, b in [(1, 1), (2, 5), (7, 3), (12, 11), (5, 30)]:
    t = trace_frobenius_linear(f37, a, b)
    deficit = 37 - brute_count(f37, CurveParams("A", 3, a, b))
    disc = cubic_discriminant_linear(f37, a, b)
    print(f"  {a:>3} {b:>3} {t:>6} {deficit:>8} {disc:>5}")
    assert t == deficit
    if disc != 0:
        assert abs(t) <= hasse_bound(37)
print("  Hasse bound 2*sqrt(37) =", round(hasse_bound(37), 3))

# The x^3 + ax^2 + b shape needs only 6 | q - 1, so it covers fields
# like q = 7 and q = 19 where the linear-term theorem is silent.
f7 = build_field(7)
print("\nq=7, y^2 = x^3 + ax^2 + b")
for a, b in [(1, 1), (3, 2), (5, 4)]:
    t = trace_frobenius_quadratic(f7, a, b)
    deficit = 7 - brute_count(f7, CurveParams("B", 3, a, b))
    disc = cubic_discriminant_quadratic(f7, a, b)
    print(f"  a={a} b={b}: trace {t:+d}, deficit {deficit:+d}, disc {disc}")
    assert t == deficit

# Extension fields and the exact backend work the same way.
f25 = build_field(5, 2)
ring = get_ring(f25, "exact")
smooth = [a for a in range(1, 25) if cubic_discriminant_linear(f25, a, 6) != 0]
traces = [trace_frobenius_linear(f25, a, 6, ring=ring) for a in smooth]
print("\nq=25 traces for y^2 = x^3 + ax + 6 (nonsingular a):", traces)
print("all within Hasse bound:", all(abs(t) <= hasse_bound(25) for t in traces))
