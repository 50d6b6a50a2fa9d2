"""Rank-1 classification: Picard invariants, group law, intertwiners.

A one-dimensional module at level mu is determined by its raising function
r(z) up to the multiplicative difference relation r ~ r * t(z)/t(z+1).
The full invariant is (level, leading ratio, net multiset of shift classes
of the irreducible factors of r), stored symbolically: two modules of
equal level are isomorphic exactly when these data agree, and an exact
intertwiner can then be assembled from shifted products.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from .factor import factor_poly
from .poly import Poly
from .ratfunc import RatFunc, as_ratfunc, leading_ratio
from .shifts import canonical_shift_rep

Scalar = Union[int, Fraction]

ClassItem = Tuple[Poly, int]


def _class_sort_key(item: ClassItem):
    poly, _ = item
    return (poly.degree, poly.coeffs)


@dataclass(frozen=True)
class PicInvariant:
    """(level, leading ratio, net shift-class multiplicities), all exact."""

    level: Fraction
    lead: Fraction
    classes: Tuple[ClassItem, ...]

    def class_dict(self) -> Dict[Poly, int]:
        return dict(self.classes)

    def __str__(self) -> str:
        cls = ", ".join(f"{p}: {m:+d}" for p, m in self.classes)
        return f"(level={self.level}, lead={self.lead}, {{{cls}}})"


def _canonical_classes(counts: Dict[Poly, int]) -> Tuple[ClassItem, ...]:
    items = [(p, m) for p, m in counts.items() if m != 0]
    items.sort(key=_class_sort_key)
    return tuple(items)


def pic_invariant(mu: Scalar, r) -> PicInvariant:
    """Factor r and accumulate net multiplicities per canonical shift class."""
    r = as_ratfunc(r)
    if r.is_zero():
        raise ValueError("invariants are defined for nonzero functions")
    counts: Dict[Poly, int] = {}
    for poly, sign in ((r.num, 1), (r.den, -1)):
        if poly.degree < 1:
            continue
        _, facs = factor_poly(poly)
        for fac, mult in facs:
            rep, _ = canonical_shift_rep(fac)
            counts[rep] = counts.get(rep, 0) + sign * mult
    return PicInvariant(Fraction(mu), leading_ratio(r), _canonical_classes(counts))


def pic_identity() -> PicInvariant:
    return PicInvariant(Fraction(0), Fraction(1), ())


def section(mu: Scalar) -> PicInvariant:
    """The group-morphism section of the level map: mu -> class of (level mu, r = 1)."""
    return PicInvariant(Fraction(mu), Fraction(1), ())


def level_of(a: PicInvariant) -> Fraction:
    return a.level


def pic_mul(a: PicInvariant, b: PicInvariant) -> PicInvariant:
    counts = dict(a.classes)
    for p, m in b.classes:
        counts[p] = counts.get(p, 0) + m
    return PicInvariant(a.level + b.level, a.lead * b.lead, _canonical_classes(counts))


def pic_inverse(a: PicInvariant) -> PicInvariant:
    return PicInvariant(-a.level, 1 / a.lead, _canonical_classes({p: -m for p, m in a.classes}))


# -- the multiplicative difference equation t(z)/t(z+1) = f(z) --------------------


def _offset_multisets(f: RatFunc) -> Optional[Dict[Poly, Tuple[List[int], List[int]]]]:
    """Per canonical class: (zero offsets, pole offsets) with multiplicity."""
    out: Dict[Poly, Tuple[List[int], List[int]]] = {}
    for poly, which in ((f.num, 0), (f.den, 1)):
        if poly.degree < 1:
            continue
        _, facs = factor_poly(poly)
        for fac, mult in facs:
            rep, a = canonical_shift_rep(fac)
            out.setdefault(rep, ([], []))[which].extend([a] * mult)
    return out


def solve_mult_diff(f) -> Optional[RatFunc]:
    """Solve t(z)/t(z+1) = f(z) in Q(z), or None when no solution exists.

    Solvable iff zeros and poles pair up under integer shifts with leading
    ratio one; the solution is assembled from shifted products of the
    canonical class representatives and normalized monic/monic.
    """
    f = as_ratfunc(f)
    if f.is_zero():
        raise ValueError("the equation needs a nonzero right-hand side")
    if leading_ratio(f) != 1:
        return None
    table = _offset_multisets(f)
    num = Poly.one()
    den = Poly.one()
    for rep in sorted(table, key=lambda p: (p.degree, p.coeffs)):
        zeros, poles = table[rep]
        if len(zeros) != len(poles):
            return None
        zeros.sort()
        poles.sort()
        for u, v in zip(zeros, poles):
            if u > v:
                for s in range(v + 1, u + 1):
                    num = num * rep.shifted(-s)
            elif v > u:
                for s in range(u + 1, v + 1):
                    den = den * rep.shifted(-s)
    t = RatFunc(num, den)
    assert t / t.shifted(1) == f, "constructed solution must verify exactly"
    return t


# -- rank-1 isomorphism testing ------------------------------------------------------


class IsoResult(NamedTuple):
    intertwiner: Optional[RatFunc]
    reason: Optional[str]  # None | "LevelMismatch" | "InvariantMismatch"


def _rank1_data(rep) -> Tuple[Fraction, RatFunc]:
    if rep.dim != 1:
        raise ValueError("expected a one-dimensional module")
    r = rep.B[0, 0]
    c = RatFunc(Poly((0, -1, 1))) - rep.A[0, 0] * r.shifted(-1)
    if not c.is_constant():
        raise ValueError("one-dimensional module with non-constant Casimir")
    return c.constant_value(), r


def iso_rank1(r1rep, r2rep) -> IsoResult:
    """Intertwiner t with r2(z) t(z+1) = t(z) r1(z), or a reason code.

    Levels are compared first: a raising intertwiner can exist across
    levels even though the module Hom is zero, so the scalar test alone
    would be unsound.
    """
    mu1, r1 = _rank1_data(r1rep)
    mu2, r2 = _rank1_data(r2rep)
    if mu1 != mu2:
        return IsoResult(None, "LevelMismatch")
    if pic_invariant(mu1, r1) != pic_invariant(mu2, r2):
        return IsoResult(None, "InvariantMismatch")
    t = solve_mult_diff(r2 / r1)
    assert t is not None, "equal invariants must admit an intertwiner"
    assert r2 * t.shifted(1) == t * r1
    return IsoResult(t, None)
