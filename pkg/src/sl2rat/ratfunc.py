"""The rational-function field Q(z): reduced fractions of exact polynomials.

A RatFunc is a pair (num, den) with den monic and gcd(num, den) = 1, so
equality is structural equality of canonical forms.  This is the scalar
field for every matrix and representation in the library.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import ZeroDenominator
from .factor import factor_poly
from .poly import Poly, format_poly, poly_gcd

Scalar = Union[int, Fraction]


def _as_poly(x) -> Optional[Poly]:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.constant(x)
    return None


class RatFunc:
    """Element of Q(z) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly.one()):
        np, dp = _as_poly(num), _as_poly(den)
        if np is None or dp is None:
            raise TypeError(f"cannot build a rational function from {num!r}/{den!r}")
        if dp.is_zero():
            raise ZeroDenominator("zero denominator")
        if np.is_zero():
            self.num, self.den = Poly.zero(), Poly.one()
            return
        g = poly_gcd(np, dp)
        if g.degree > 0:
            np, dp = np // g, dp // g
        c = dp.lead
        if c != 1:
            inv = 1 / c
            np = np * inv
            dp = dp * inv
        self.num, self.den = np, dp

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        """Skip reduction when (num, den) is already canonical."""
        self = object.__new__(cls)
        self.num, self.den = num, den
        return self

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc._raw(Poly.zero(), Poly.one())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc._raw(Poly.one(), Poly.one())

    @staticmethod
    def variable() -> "RatFunc":
        return RatFunc._raw(Poly.variable(), Poly.one())

    @staticmethod
    def constant(c: Scalar) -> "RatFunc":
        return RatFunc._raw(Poly.constant(c), Poly.one())

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den == Poly.one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num.constant_value()

    def is_polynomial(self) -> bool:
        return self.den == Poly.one()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations --------------------------------------------------

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return (RatFunc.one() / self) ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n) if n else RatFunc.one()

    def inverse(self) -> "RatFunc":
        return RatFunc.one() / self

    # -- the shift automorphism ---------------------------------------------

    def shifted(self, k: Scalar) -> "RatFunc":
        """f(z) -> f(z + k); canonical form is preserved by the shift."""
        if k == 0:
            return self
        return RatFunc._raw(self.num.shifted(k), self.den.shifted(k).monic())

    # -- presentation ----------------------------------------------------------

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({format_ratfunc(self)!r})"


def _coerce(x) -> Optional[RatFunc]:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return RatFunc(x)
    return None


def as_ratfunc(x) -> RatFunc:
    r = _coerce(x)
    if r is None:
        raise TypeError(f"not coercible to a rational function: {x!r}")
    return r


def format_ratfunc(f: RatFunc, var: str = "z") -> str:
    """Canonical printer; sides with more than one term get parentheses."""
    ns = format_poly(f.num, var)
    if f.den == Poly.one():
        return ns
    ds = format_poly(f.den, var)
    if _nterms(f.num) > 1:
        ns = f"({ns})"
    if _nterms(f.den) > 1:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def _nterms(p: Poly) -> int:
    return sum(1 for c in p.coeffs if c != 0)


def shift_ratfunc(f: RatFunc, k: int) -> RatFunc:
    """The shift automorphism applied k times: f(z) -> f(z + k)."""
    return f.shifted(k)


def leading_ratio(r: RatFunc) -> Fraction:
    """Leading coefficient of the numerator over that of the denominator."""
    if r.is_zero():
        raise ValueError("zero rational function has no leading ratio")
    return r.num.lead / r.den.lead


def pochhammer(xi: RatFunc, m: int) -> RatFunc:
    """Shifted-product Pochhammer expression on a rational function.

    P(xi, 0) = 1; P(xi, m) = xi(z) xi(z+1) ... xi(z+m-1) for m > 0;
    P(xi, m) = 1 / (xi(z+m) ... xi(z-1)) for m < 0.
    """
    if m == 0:
        return RatFunc.one()
    if m > 0:
        out = RatFunc.one()
        for j in range(m):
            out = out * xi.shifted(j)
        return out
    out = RatFunc.one()
    for j in range(m, 0):
        out = out * xi.shifted(j)
    return RatFunc.one() / out


# -- partial fractions ---------------------------------------------------------


def poly_xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Extended gcd over Q[z]: (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return Poly.zero(), s0, t0
    c = 1 / r0.lead
    return r0 * c, s0 * c, t0 * c


def partial_fractions(f: RatFunc) -> Tuple[Poly, List[Tuple[Poly, int, Poly]]]:
    """Decompose f as poly_part + sum of a/(q^j), q monic irreducible, deg a < deg q.

    Returns (poly_part, [(q, j, a)]) sorted by (q, j).  Exact; recombining
    reproduces f.
    """
    poly_part, rem = divmod(f.num, f.den)
    if rem.is_zero():
        return poly_part, []
    _, facs = factor_poly(f.den)
    pieces: List[Tuple[Poly, int, Poly]] = []
    for q, e in facs:
        qe = q ** e
        cofactor = f.den // qe
        if cofactor.degree > 0 or cofactor.coefficient(0) != 1:
            g, u, _ = poly_xgcd(cofactor, qe)
            assert g == Poly.one()
            c = (rem * u) % qe
        else:
            c = rem % qe
        # expand c / q^e in powers of q
        j = e
        while not c.is_zero() and j >= 1:
            c, a = divmod(c, q)
            if not a.is_zero():
                pieces.append((q, j, a))
            j -= 1
    pieces.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return poly_part, pieces
