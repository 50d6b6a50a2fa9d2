"""Finite-dimensional rational sl(2)-modules over Q(z).

A representation is a pair of square matrices (A, B) over Q(z): A is the
matrix of the lowering operator (twist -1), B of the raising operator
(twist +1), with L_0 acting as multiplication by z.  Validity is the exact
commutation identity

    A(z) B(z-1) - B(z) A(z+1) = -2z * Id.

The Casimir matrix is C(z) = z(z-1) Id - A(z) B(z-1); its minimal
polynomial always has constant coefficients, which drives the level
decomposition, the canonical filtration, and everything downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import (
    LevelOutsideBaseField,
    NonConstantMinpoly,
    NotARepresentation,
    NotCasimir,
    NotInvariant,
    NotPolynomial,
    PiMuIrreducible,
    SingularMatrix,
    SingularOperator,
)
from .factor import factor_poly
from .matrix import Mat
from .poly import Poly, mu_roots, pi_mu, poly_lcm
from .ratfunc import RatFunc, as_ratfunc
from .semilinear import SemiOp

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class RationalRep:
    """dim, matrix of L_{-1} (twist -1) and matrix of L_1 (twist +1)."""

    dim: int
    A: Mat
    B: Mat

    def lowering(self) -> SemiOp:
        return SemiOp(self.A, -1)

    def raising(self) -> SemiOp:
        return SemiOp(self.B, +1)

    def __str__(self) -> str:
        return f"RationalRep(dim={self.dim}, A={self.A}, B={self.B})"


@dataclass(frozen=True)
class PolynomialRep:
    """Representation with polynomial matrix entries (a free finite-type module)."""

    dim: int
    A: Mat
    B: Mat


@dataclass(frozen=True)
class LevelComponent:
    """One generalized-Casimir block of the level decomposition."""

    level: Fraction
    exponent: int
    basis: Mat  # ambient-coordinates columns spanning ker(C - level)^exponent
    rep: RationalRep  # the restricted representation


@dataclass(frozen=True)
class FiltrationStep:
    basis: Mat  # columns spanning V^i inside the component
    quotient: RationalRep  # V^i / V^{i-1}


@dataclass(frozen=True)
class Filtration:
    level: Fraction
    steps: Tuple[FiltrationStep, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    def quotient_dims(self) -> Tuple[int, ...]:
        return tuple(s.quotient.dim for s in self.steps)


# -- construction and validation --------------------------------------------


def commutation_residual(A: Mat, B: Mat) -> Mat:
    """A(z) B(z-1) - B(z) A(z+1) + 2z Id; zero exactly on representations."""
    n = A.nrows
    two_z = Mat.diag([RatFunc(Poly((0, 2)))] * n)
    return A * B.shifted(-1) - B * A.shifted(1) + two_z


def validate(rep: RationalRep) -> RationalRep:
    """Accept iff the commutation identity holds and both operators invert."""
    A, B = rep.A, rep.B
    if A.nrows != A.ncols or B.nrows != B.ncols or A.nrows != B.nrows:
        raise ValueError("operator matrices must be square and of equal size")
    if A.nrows != rep.dim:
        raise ValueError("declared dimension disagrees with the matrices")
    residual = commutation_residual(A, B)
    if not residual.is_zero():
        raise NotARepresentation(residual)
    if A.det().is_zero() or B.det().is_zero():
        raise SingularOperator("lowering/raising operator is singular")
    return rep


def make_rep(A: Mat, B: Mat) -> RationalRep:
    return validate(RationalRep(A.nrows, A, B))


def rep_from_strings(l1_rows: Sequence[Sequence[str]], lm1_rows: Sequence[Sequence[str]]) -> RationalRep:
    from .matrix import mat_from_strings

    return make_rep(mat_from_strings(lm1_rows), mat_from_strings(l1_rows))


# -- Casimir analysis ---------------------------------------------------------


def casimir_matrix(rep: RationalRep) -> Mat:
    """C(z) = z(z-1) Id - A(z) B(z-1); commutes with both operators."""
    zz = RatFunc(Poly((0, -1, 1)))
    return Mat.diag([zz] * rep.dim) - rep.A * rep.B.shifted(-1)


def _constant_entry(f: RatFunc) -> Optional[Fraction]:
    if f.is_constant():
        return f.constant_value()
    return None


def casimir_level(rep: RationalRep) -> Optional[Fraction]:
    """The level when the rep is Casimir (C = mu * Id), else None."""
    C = casimir_matrix(rep)
    mu = _constant_entry(C[0, 0])
    if mu is None:
        return None
    n = rep.dim
    for i in range(n):
        for j in range(n):
            want = mu if i == j else 0
            if C[i, j] != RatFunc.constant(want):
                return None
    return mu


def is_casimir(rep: RationalRep) -> bool:
    return casimir_level(rep) is not None


def require_casimir(rep: RationalRep) -> Fraction:
    mu = casimir_level(rep)
    if mu is None:
        raise NotCasimir("operation requires a Casimir module")
    return mu


def casimir_minpoly(rep: RationalRep) -> Poly:
    """Minimal polynomial of the Casimir matrix, returned over Q in t.

    Computed as the lcm of Krylov local minimal polynomials; a non-constant
    coefficient raises NonConstantMinpoly (impossible for valid reps).
    """
    C = casimir_matrix(rep)
    n = rep.dim
    mp = Poly.one()
    for start in range(n):
        if mp.degree == n:
            break
        e = Mat.column([1 if i == start else 0 for i in range(n)])
        krylov = [e]
        while True:
            nxt = C * krylov[-1]
            cols = Mat.from_columns([k.col(0) for k in krylov])
            sol = cols.solve(nxt)
            if sol is not None:
                coeffs = []
                for i in range(len(krylov)):
                    c = _constant_entry(sol[i, 0])
                    if c is None:
                        raise NonConstantMinpoly(
                            "local minimal polynomial has non-constant coefficients"
                        )
                    coeffs.append(-c)
                local = Poly(coeffs + [1])
                mp = poly_lcm(mp, local)
                break
            krylov.append(nxt)
    return mp


# -- constructors -----------------------------------------------------------------


def rank1(mu: Scalar, r) -> RationalRep:
    """The one-dimensional module with raising matrix r(z)."""
    r = as_ratfunc(r)
    if r.is_zero():
        raise ValueError("rank-1 modules need a nonzero rational function")
    pimu = RatFunc(pi_mu(mu))
    A = Mat([[pimu / r.shifted(-1)]])
    B = Mat([[r]])
    return make_rep(A, B)


def casimir_from_L1(mu: Scalar, B: Mat) -> RationalRep:
    """Casimir module of level mu determined by an invertible raising matrix."""
    try:
        inv = B.shifted(-1).inverse()
    except SingularMatrix as exc:
        raise SingularOperator("raising matrix is singular") from exc
    A = RatFunc(pi_mu(mu)) * inv
    return make_rep(A, B)


def direct_sum(r1: RationalRep, r2: RationalRep) -> RationalRep:
    return make_rep(Mat.block_diag([r1.A, r2.A]), Mat.block_diag([r1.B, r2.B]))


def conjugate(rep: RationalRep, T: Mat) -> RationalRep:
    """Change of presentation: B -> T(z) B(z) T(z+1)^-1, A -> T(z) A(z) T(z-1)^-1."""
    Tinv_p = T.shifted(1).inverse()
    Tinv_m = T.shifted(-1).inverse()
    return make_rep(T * rep.A * Tinv_m, T * rep.B * Tinv_p)


def level_shift(rep: RationalRep, nu: Scalar) -> RationalRep:
    """Move a Casimir module of level mu to the isomorphic category at level nu."""
    mu = require_casimir(rep)
    factor = RatFunc(pi_mu(nu)) / RatFunc(pi_mu(mu))
    return make_rep(factor * rep.A, rep.B)


def cyclic_orbit(mu: Scalar, r, m: int) -> RatFunc:
    """Coefficient of the m-th orbit vector of the cyclic generator w = 1."""
    from .ratfunc import pochhammer

    r = as_ratfunc(r)
    if r.is_zero():
        raise ValueError("rank-1 modules need a nonzero rational function")
    if m >= 0:
        return pochhammer(r, m)
    xi = r / RatFunc(pi_mu(mu).shifted(1))
    return pochhammer(xi, m)


# -- invariant subspaces, restriction, quotient ----------------------------------


def _check_full_column_rank(P: Mat):
    if P.rank() != P.ncols:
        raise ValueError("basis columns must be independent")


def restrict_to_invariant_subspace(rep: RationalRep, basis: Mat) -> RationalRep:
    """Representation on the column span of `basis`; NotInvariant when not closed."""
    _check_full_column_rank(basis)
    Bres = basis.solve(rep.B * basis.shifted(1))
    Ares = basis.solve(rep.A * basis.shifted(-1))
    if Bres is None or Ares is None:
        raise NotInvariant("column span is not closed under the operators")
    return make_rep(Ares, Bres)


def _complete_basis(P: Mat) -> Mat:
    """Extend independent columns to a square invertible matrix with unit vectors."""
    n = P.nrows
    cols = list(P.columns())
    current = Mat.from_columns(cols)
    for i in range(n):
        if len(cols) == n:
            break
        e = tuple(RatFunc.one() if j == i else RatFunc.zero() for j in range(n))
        candidate = Mat.from_columns(cols + [e])
        if candidate.rank() == len(cols) + 1:
            cols.append(e)
            current = candidate
    assert len(cols) == n
    return current


def quotient_by_invariant_subspace(rep: RationalRep, basis: Mat) -> RationalRep:
    """Representation on the quotient by the column span of `basis`."""
    _check_full_column_rank(basis)
    k = basis.ncols
    U = _complete_basis(basis)
    Uinv = U.inverse()
    Bn = Uinv * rep.B * U.shifted(1)
    An = Uinv * rep.A * U.shifted(-1)
    n = rep.dim
    lower = [(i, j) for i in range(k, n) for j in range(k)]
    if any(not Bn[i, j].is_zero() for i, j in lower) or any(
        not An[i, j].is_zero() for i, j in lower
    ):
        raise NotInvariant("column span is not closed under the operators")
    rng = range(k, n)
    return make_rep(An.submatrix(rng, rng), Bn.submatrix(rng, rng))


# -- level decomposition and canonical filtration --------------------------------


def level_decompose(rep: RationalRep) -> List[LevelComponent]:
    """Split into generalized Casimir components along the Casimir minpoly."""
    mp = casimir_minpoly(rep)
    _, facs = factor_poly(mp)
    for fac, _ in facs:
        if fac.degree > 1:
            raise LevelOutsideBaseField(fac)
    levels = sorted((-fac.coefficient(0), mult) for fac, mult in facs)
    C = casimir_matrix(rep)
    out = []
    total = 0
    for mu, mult in levels:
        M = C - Mat.diag([RatFunc.constant(mu)] * rep.dim)
        Mp = Mat.identity(rep.dim)
        for _ in range(mult):
            Mp = Mp * M
        basis_vectors = Mp.kernel()
        basis = Mat.from_columns(basis_vectors)
        sub = restrict_to_invariant_subspace(rep, basis)
        out.append(LevelComponent(mu, mult, basis, sub))
        total += basis.ncols
    assert total == rep.dim, "component dimensions must sum to the total"
    return out


def canonical_filtration(comp: LevelComponent) -> Filtration:
    """V^i = ker(C - mu)^i inside the component; quotients are Casimir of level mu."""
    rep = comp.rep
    mu = comp.level
    C = casimir_matrix(rep)
    N = C - Mat.diag([RatFunc.constant(mu)] * rep.dim)
    cols: List[Tuple[RatFunc, ...]] = []
    steps: List[FiltrationStep] = []
    Np = Mat.identity(rep.dim)
    prev_dim = 0
    prev_quot_dim = None
    for i in range(1, comp.exponent + 1):
        Np = Np * N
        ker = Np.kernel()
        # extend the nested basis with kernel vectors that add rank
        for v in ker:
            if not cols:
                if any(not e.is_zero() for e in v):
                    cols.append(v)
                continue
            candidate = Mat.from_columns(cols + [v])
            if candidate.rank() == len(cols) + 1:
                cols.append(v)
        basis = Mat.from_columns(cols)
        assert basis.ncols == len(ker), "kernel basis extension lost rank"
        sub = restrict_to_invariant_subspace(rep, basis)
        if prev_dim == 0:
            quotient = sub
        else:
            prefix = Mat.from_columns(
                [tuple(RatFunc.one() if r == j else RatFunc.zero() for r in range(basis.ncols)) for j in range(prev_dim)]
            )
            quotient = quotient_by_invariant_subspace(sub, prefix)
        qmu = casimir_level(quotient)
        assert qmu == mu, "filtration quotient must be Casimir of the component level"
        if prev_quot_dim is not None and quotient.dim > prev_quot_dim:
            raise AssertionError("filtration quotient dimensions must be non-increasing")
        prev_quot_dim = quotient.dim
        steps.append(FiltrationStep(basis, quotient))
        prev_dim = basis.ncols
    assert prev_dim == rep.dim, "filtration must exhaust the component"
    return Filtration(mu, tuple(steps))


# -- rank-1 polynomial families and rationalization ------------------------------


_KINDS = ("I", "II", "III", "IV")


def _split_pi_mu(mu: Fraction) -> Tuple[Poly, Poly]:
    roots = mu_roots(mu)
    if roots is None:
        raise PiMuIrreducible(f"z^2 - z - ({mu}) has no rational roots")
    hi, lo = roots
    z = Poly.variable()
    return z - hi, z - lo  # (alpha, beta), larger root first


def poly_rank1(kind: str, mu: Scalar, gamma: Scalar) -> PolynomialRep:
    """The four rank-1 polynomial families; II/III need pi_mu to split."""
    mu = Fraction(mu)
    gamma = Fraction(gamma)
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    if kind not in _KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    pim = pi_mu(mu)
    if kind == "I":
        a, b = Poly.constant(1 / gamma), gamma * pim.shifted(1)
    elif kind == "IV":
        a, b = (1 / gamma) * pim, Poly.constant(gamma)
    else:
        alpha, beta = _split_pi_mu(mu)
        if kind == "II":
            a, b = (1 / gamma) * beta, gamma * alpha.shifted(1)
        else:
            a, b = (1 / gamma) * alpha, gamma * beta.shifted(1)
    rep = PolynomialRep(1, Mat([[RatFunc(a)]]), Mat([[RatFunc(b)]]))
    validate_polynomial(rep)
    return rep


def validate_polynomial(rep: PolynomialRep) -> PolynomialRep:
    for mat in (rep.A, rep.B):
        for row in mat.data:
            for e in row:
                if not e.is_polynomial():
                    raise NotPolynomial(f"entry {e} is not polynomial")
    residual = commutation_residual(rep.A, rep.B)
    if not residual.is_zero():
        raise NotARepresentation(residual)
    return rep


def rationalize(rep: PolynomialRep) -> RationalRep:
    """Localize to the function field: same matrices, revalidated."""
    validate_polynomial(rep)
    return make_rep(rep.A, rep.B)


def classify_rank1(rep: RationalRep):
    """Match a rank-1 module against the rationalized polynomial families.

    Returns a list of (kind, gamma) pairs, every family whose invariant
    matches; the empty list means the module is not a rationalization of a
    rank-1 polynomial module.  Kinds II and III can both appear when the
    two linear factors are shift-equivalent.
    """
    from .picard import pic_invariant

    if rep.dim != 1:
        raise ValueError("classification applies to one-dimensional modules")
    mu = require_casimir(rep)
    r = rep.B[0, 0]
    inv = pic_invariant(mu, r)
    bases = {"I": RatFunc(pi_mu(mu).shifted(1)), "IV": RatFunc.one()}
    if mu_roots(mu) is not None:
        alpha, beta = _split_pi_mu(mu)
        bases["II"] = RatFunc(alpha.shifted(1))
        bases["III"] = RatFunc(beta.shifted(1))
    matches = []
    for kind in _KINDS:
        base = bases.get(kind)
        if base is None:
            continue
        base_inv = pic_invariant(mu, base)
        if base_inv.classes == inv.classes:
            matches.append((kind, inv.lead / base_inv.lead))
    return matches
