"""The scalar field: exact rational functions of z and the shift.

Everything in the library lives over Q(z) with exact rational
coefficients.  This walk-through covers parsing, canonical forms, the
shift automorphism, Pochhammer products, factorization and the
shift-equivalence normal form that the Picard machinery is built on.
"""
from fractions import Fraction

from sl2rat import (
    RatFunc,
    canonical_shift_rep,
    factor_poly,
    parse_ratfunc,
    pi_mu,
    pochhammer,
    shift_offset,
    shift_ratfunc,
)
from sl2rat.poly import Poly

z = RatFunc.variable()

print("== parsing and canonical forms ==")
f = parse_ratfunc("(z^2 - 1)/(z^2 - z)")
print(f"(z^2 - 1)/(z^2 - z) reduces to {f}")          # common factor (z-1) cancels
print(f"round trip: {parse_ratfunc(str(f)) == f}")

print("\n== the shift automorphism ==")
g = 1 / (z - 1)
print(f"g = {g},  g(z+1) = {shift_ratfunc(g, 1)},  g(z-2) = {shift_ratfunc(g, -2)}")

print("\n== Pochhammer products ==")
print(f"P(z, 3)  = {pochhammer(z, 3)}")
print(f"P(z, -1) = {pochhammer(z, -1)}")
xi = (z + 1) / z
lhs = pochhammer(xi, 2) * shift_ratfunc(pochhammer(xi, 3), 2)
print(f"telescoping: P(xi,2) * P(xi,3)(z+2) == P(xi,5): {lhs == pochhammer(xi, 5)}")

print("\n== factorization over Q ==")
p = pi_mu(2) * Poly([2, 0, 2])          # (z^2 - z - 2) * (2 z^2 + 2)
lead, factors = factor_poly(p)
print(f"p = {p}")
print(f"lead = {lead}, factors = {[(str(q), m) for q, m in factors]}")

print("\n== shift classes ==")
q = Poly([5, 4, 1])                      # z^2 + 4 z + 5, roots -2 +- i
rep, offset = canonical_shift_rep(q)
print(f"{q} = c(z - a) with c = {rep}, a = {offset}")
print(f"offset between z^2+1 and {q}: {shift_offset(Poly([1, 0, 1]), q)}")
print(f"no integer shift relates z and z - 1/2: {shift_offset(Poly([0, 1]), Poly([Fraction(-1, 2), 1]))}")
