"""The monoidal structure: tensor products, internal Hom, duals.

Dimensions multiply, Casimir levels add under tensor and subtract under
Hom; the one-dimensional modules are exactly the invertible objects, and
their classes form the Picard group.
"""
from fractions import Fraction

from sl2rat import (
    RatFunc,
    casimir_level,
    casimir_minpoly,
    direct_sum,
    dual,
    internal_hom,
    pic_identity,
    pic_invariant,
    pic_mul,
    rank1,
    tensor,
    unit,
)
from sl2rat.poly import format_poly

z = RatFunc.variable()

print("== tensor of rank-1 modules multiplies the raising functions ==")
a = rank1(Fraction(1, 2), z)
b = rank1(1, (z - 1) / z)
t = tensor(a, b)
print(f"levels {casimir_level(a)} + {casimir_level(b)} -> {casimir_level(t)}")
print(f"raising: {a.B[0, 0]} * {b.B[0, 0]} = {t.B[0, 0]}")

print("\n== the unit is neutral ==")
w = direct_sum(rank1(0, z), rank1(2, 1))
print(f"unit (x) W == W: {tensor(unit(), w) == w}")

print("\n== Hom and duals ==")
h = internal_hom(a, b)
print(f"Hom(a, b) has level {casimir_level(h)} and raising {h.B[0, 0]}")
d = dual(a)
print(f"dual(a) = level {casimir_level(d)}, raising {d.B[0, 0]}")
print(f"double dual is the identity: {dual(d) == a}")

print("\n== invertibles give the Picard group ==")
ia = pic_invariant(casimir_level(a), a.B[0, 0])
id_ = pic_invariant(casimir_level(d), d.B[0, 0])
print(f"inv(a) * inv(dual a) = identity: {pic_mul(ia, id_) == pic_identity()}")

print("\n== higher-dimensional tensors ==")
big = tensor(w, w)
print(f"dim {w.dim} x {w.dim} -> {big.dim}")
print(f"Casimir minpoly of the tensor: {format_poly(casimir_minpoly(big), 't')}")
