"""Representations, the Casimir operator, levels and filtrations.

A module is a pair of matrices: A for the lowering operator (twist -1),
B for the raising operator (twist +1), with z acting as multiplication.
The Casimir matrix C(z) = z(z-1) - A(z)B(z-1) always has a minimal
polynomial with constant coefficients, which is what makes the whole
structure theory computable.
"""
from fractions import Fraction

from sl2rat import (
    ExtDatum,
    LevelOutsideBaseField,
    Mat,
    NotARepresentation,
    RatFunc,
    RationalRep,
    canonical_filtration,
    casimir_matrix,
    casimir_minpoly,
    direct_sum,
    ext_build,
    level_decompose,
    level_shift,
    rank1,
    validate,
)
from sl2rat.poly import Poly, format_poly

z = RatFunc.variable()

print("== the basic one-dimensional modules ==")
w = rank1(Fraction(1, 2), (z - 1) / z)
print(f"A = {w.A}, B = {w.B}")
print(f"Casimir matrix: {casimir_matrix(w)}")

print("\n== validation catches non-representations ==")
try:
    validate(RationalRep(1, Mat([[1]]), Mat([[1]])))
except NotARepresentation as exc:
    print(f"rejected, residual = {exc.residual}")

print("\n== minimal polynomials and level decomposition ==")
big = direct_sum(direct_sum(rank1(0, z), rank1(2, 1)), rank1(0, 1))
mp = casimir_minpoly(big)
print(f"minpoly of a (0, 2, 0)-sum: {format_poly(mp, 't')}")
for comp in level_decompose(big):
    print(f"  level {comp.level}: exponent {comp.exponent}, dim {comp.rep.dim}")

print("\n== a genuinely generalized module (exponent 2) ==")
gen = ext_build(ExtDatum(rank1(0, 1), rank1(0, 1), Mat([[0]]), Mat([[1]])))
print(f"Casimir matrix {casimir_matrix(gen)}, minpoly {format_poly(casimir_minpoly(gen), 't')}")
comp = level_decompose(gen)[0]
filt = canonical_filtration(comp)
print(f"canonical filtration dims: {[s.basis.ncols for s in filt.steps]}")
print(f"quotient dims (non-increasing): {filt.quotient_dims()}")

print("\n== levels outside the rationals are refused, not approximated ==")
zz = RatFunc(Poly((0, -1, 1)))
A = Mat.diag([zz, zz]) - Mat([[0, 2], [1, 0]])
try:
    level_decompose(validate(RationalRep(2, A, Mat.identity(2))))
except LevelOutsideBaseField as exc:
    print(f"refused with factor {format_poly(exc.factor, 't')}")

print("\n== moving between levels ==")
shifted = level_shift(rank1(0, z), Fraction(5, 2))
print(f"level_shift keeps B: {shifted.B}, new Casimir: {casimir_matrix(shifted)}")
