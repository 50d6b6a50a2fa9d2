"""Shift-equivalence machinery for monic irreducible polynomials.

Two monic irreducibles are shift-equivalent when one is an integer shift
of the other ("roots equal mod Z").  The canonical representative of a
class is the unique shift whose mean of roots lies in [0, 1); the mean is
rational for rational coefficients and moves by exactly a under z -> z+a,
so this is a faithful, shift-equivariant normal form.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Optional

from .poly import Poly


class ShiftClass(NamedTuple):
    """Canonical representative plus the integer offset of the given poly."""

    rep: Poly
    offset: int


def shift_offset(p: Poly, q: Poly) -> Optional[int]:
    """Integer a with q(z) = p(z + a), or None.

    Both arguments must be monic of equal degree; the candidate offset is
    (trace difference)/degree, verified by full coefficient comparison.
    """
    if p.degree != q.degree:
        raise ValueError("degree mismatch")
    if p.degree < 1:
        raise ValueError("constant polynomials have no shift offset")
    a = p.mean_of_roots() - q.mean_of_roots()
    if a.denominator != 1:
        return None
    a = int(a)
    return a if p.shifted(a) == q else None


def canonical_shift_rep(p: Poly) -> ShiftClass:
    """(c, a) with p(z) = c(z - a), a integer, mean of roots of c in [0, 1)."""
    if p.degree < 1:
        raise ValueError("constant polynomials have no shift class")
    if p.lead != 1:
        raise ValueError("shift classes are defined for monic polynomials")
    a = math.floor(p.mean_of_roots())
    return ShiftClass(p.shifted(a), a)
