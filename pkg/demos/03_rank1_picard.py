"""Rank-1 modules: Picard invariants, isomorphism testing, classification.

One-dimensional modules at a fixed level are classified by a symbolic
invariant: the leading-coefficient ratio plus the net multiset of shift
classes of zeros and poles.  Two modules are isomorphic exactly when the
invariants agree, and then an explicit intertwiner comes out of shifted
products.
"""
from fractions import Fraction

from sl2rat import (
    RatFunc,
    classify_rank1,
    iso_rank1,
    pic_identity,
    pic_inverse,
    pic_invariant,
    pic_mul,
    poly_rank1,
    rank1,
    rationalize,
    section,
    solve_mult_diff,
)

z = RatFunc.variable()

print("== the invariant ==")
r = 2 * (z - Fraction(1, 2)) / (z + Fraction(3, 2))
inv = pic_invariant(0, r)
print(f"r = {r}")
print(f"invariant: {inv}   (zero and pole share a class, only the lead remains)")

print("\n== isomorphism testing with explicit intertwiners ==")
a = rank1(0, 1)
b = rank1(0, (z - 1) / z)
res = iso_rank1(a, b)
print(f"rho_1 ~ rho_(z-1)/z: t = {res.intertwiner}")
res = iso_rank1(a, rank1(0, z))
print(f"rho_1 ~ rho_z: {res.reason}")
res = iso_rank1(a, rank1(1, 1))
print(f"levels 0 vs 1: {res.reason}")

print("\n== the multiplicative difference equation ==")
f = (z - 1) * (z + 2) / (z * (z - 2))
t = solve_mult_diff(f)
print(f"t(z)/t(z+1) = {f}: t = {t}")
print(f"verification: {t / t.shifted(1) == f}")
print(f"t(z)/t(z+1) = z is unsolvable: {solve_mult_diff(z) is None}")

print("\n== the group structure ==")
x = pic_invariant(1, z)
y = pic_inverse(x)
print(f"x = {x}")
print(f"x^-1 = {y}")
print(f"x * x^-1 = identity: {pic_mul(x, y) == pic_identity()}")
print(f"section(3/2) = {section(Fraction(3, 2))}")

print("\n== which modules come from polynomial ones ==")
for kind in ("I", "II", "III", "IV"):
    rep = rationalize(poly_rank1(kind, 2, 1))
    print(f"kind {kind}: r = {rep.B[0, 0]}, classified as {classify_rank1(rep)}")
noisy = rank1(2, rationalize(poly_rank1("I", 2, 1)).B[0, 0] * (z - 5) / (z - 7))
print(f"with shift-trivial noise: {classify_rank1(noisy)}")
print(f"not from a polynomial module: {classify_rank1(rank1(0, 1 / z))}")
