"""Devissage: disassembling a module into irreducible Casimir classes.

Three stages: split along the roots of the Casimir minimal polynomial,
refine each generalized component through its canonical filtration, then
extract composition factors of the Casimir quotients by hunting for
one-dimensional submodules (a hypergeometric certificate search on the
scalar recurrence of a cyclic vector).
"""
from sl2rat import (
    ExtDatum,
    Mat,
    RatFunc,
    devissage,
    direct_sum,
    ext_build,
    find_rank1_quotient,
    find_rank1_sub,
    k0_add,
    k0_dim,
    k0_eq,
    k0_neg,
    casimir_from_L1,
    rank1,
)

z = RatFunc.variable()

print("== a split example ==")
w = direct_sum(rank1(0, 1), rank1(1, z))
cls, tree = devissage(w)
print(tree.serialize())

print("== an irreducible two-dimensional module ==")
irr = casimir_from_L1(0, Mat([[0, z], [1, 0]]))
print(f"rank-1 sub: {find_rank1_sub(irr)}")
print(f"rank-1 quotient: {find_rank1_quotient(irr)}")
cls_irr, tree_irr = devissage(irr)
print(tree_irr.serialize())

print("== a reducible but indecomposable module ==")
glued = ext_build(ExtDatum(rank1(0, 1), rank1(0, 1), Mat([[1]]), Mat([[0]])))
found = find_rank1_sub(glued)
print(f"sub witness: w = {found[0]}, lambda = {found[1]}")
cls_g, tree_g = devissage(glued)
print(tree_g.serialize())

print("== K0 arithmetic ==")
total = k0_add(cls, cls_g)
print(f"dim of [W] + [glued]: {k0_dim(total)}")
print(f"[W] - [W] = 0: {k0_add(cls, k0_neg(cls)).entries == ()}")
print(f"k0_eq([W], [glued]): {k0_eq(cls, cls_g)}")
print(f"k0_eq on distinct opaque witnesses is honest: {k0_eq(cls_irr, cls_irr)}")
