"""Extensions: building from data, the Casimir criterion, Ext classes.

An extension of W'' by W' is given by a raising-side gluing map B1 and a
compatibility map T; the lowering-side block is forced.  For same-level
Casimir modules the result is Casimir again exactly when T = 0, and
comparing classes reduces to an additive difference equation.
"""
from sl2rat import (
    ExtDatum,
    Mat,
    RatFunc,
    casimir_matrix,
    devissage,
    ext_build,
    ext_class_equal,
    ext_is_casimir,
    exponent_of,
    rank1,
    solve_add_diff,
)

z = RatFunc.variable()
rho = rank1(0, 1)

print("== building from data ==")
w = ext_build(ExtDatum(rho, rho, Mat([[0]]), Mat([[1]])))
print(f"T = 1: A = {w.A}")
print(f"Casimir {casimir_matrix(w)}, exponent {exponent_of(w)}")

w2 = ext_build(ExtDatum(rho, rho, Mat([[1]]), Mat([[0]])))
print(f"T = 0, B1 = 1: B = {w2.B}, exponent {exponent_of(w2)}")

print("\n== the T = 0 criterion ==")
print(f"is_casimir(B1=1, T=0): {ext_is_casimir(ExtDatum(rho, rho, Mat([[1]]), Mat([[0]])))}")
print(f"is_casimir(B1=0, T=1): {ext_is_casimir(ExtDatum(rho, rho, Mat([[0]]), Mat([[1]])))}")

print("\n== the additive difference equation ==")
s = 1 / (z * (z + 1))
print(f"phi(z+1) - phi(z) = {s}: phi = {solve_add_diff(s)}")
print(f"phi(z+1) - phi(z) = 1/z: {solve_add_diff(1 / z)}  (lone residue, no partner)")

print("\n== Ext-class comparison at rank 1 ==")
examples = [
    (1 / (z - 3), 1 / z, "shifted pole, same order"),
    (1 / z, RatFunc.zero(), "lone pole against zero"),
    (1 / z ** 2, 1 / z, "same pole, different orders"),
]
for b1, b2, label in examples:
    verdict = ext_class_equal(rho, rho, b1, b2, 0, 0)
    print(f"  [{label}] -> {verdict}")

print("\n== classes feed the Grothendieck group ==")
cls, _ = devissage(w)
print(f"devissage of the T=1 extension: {[(k.serialize(), n) for k, n in cls.entries]}")
