"""Exact matrices over Q(z): arithmetic, elimination, kernels, solving.

Pivots are chosen deterministically (first nonzero) so echelon forms,
kernels and inverses are reproducible.  No sparse formats, no attempt at
asymptotically clever elimination; everything is plain and exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import SingularMatrix
from .poly import Poly
from .ratfunc import RatFunc, as_ratfunc

Entry = Union[RatFunc, Poly, int, Fraction]


class Mat:
    """Immutable rectangular matrix with RatFunc entries."""

    __slots__ = ("data",)

    def __init__(self, rows: Iterable[Iterable[Entry]]):
        data = tuple(tuple(as_ratfunc(e) for e in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrices must have at least one row and column")
        w = len(data[0])
        if any(len(r) != w for r in data):
            raise ValueError("ragged rows")
        self.data = data

    # -- constructors ---------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Mat":
        return Mat([[0] * c for _ in range(r)])

    @staticmethod
    def diag(entries: Sequence[Entry]) -> "Mat":
        n = len(entries)
        return Mat([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def column(entries: Sequence[Entry]) -> "Mat":
        return Mat([[e] for e in entries])

    @staticmethod
    def row(entries: Sequence[Entry]) -> "Mat":
        return Mat([list(entries)])

    @staticmethod
    def from_columns(cols: Sequence[Sequence[Entry]]) -> "Mat":
        return Mat([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    # -- structure ---------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def ncols(self) -> int:
        return len(self.data[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: Tuple[int, int]) -> RatFunc:
        i, j = ij
        return self.data[i][j]

    def rows_list(self) -> List[List[RatFunc]]:
        return [list(r) for r in self.data]

    def col(self, j: int) -> Tuple[RatFunc, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> List[Tuple[RatFunc, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.data == other.data

    def __hash__(self) -> int:
        return hash(("Mat", self.data))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.data for e in row)

    def map(self, fn: Callable[[RatFunc], Entry]) -> "Mat":
        return Mat([[fn(e) for e in row] for row in self.data])

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Mat(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Mat(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __neg__(self) -> "Mat":
        return self.map(lambda e: -e)

    def __mul__(self, other) -> "Mat":
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError(
                    f"dimension mismatch: ({self.nrows}x{self.ncols}) * ({other.nrows}x{other.ncols})"
                )
            cols = other.columns()
            return Mat(
                [
                    [_dot(row, col) for col in cols]
                    for row in self.data
                ]
            )
        scalar = as_ratfunc(other)
        return self.map(lambda e: e * scalar)

    def __rmul__(self, other) -> "Mat":
        scalar = as_ratfunc(other)
        return self.map(lambda e: scalar * e)

    def shifted(self, k: int) -> "Mat":
        """Entrywise shift automorphism z -> z + k."""
        if k == 0:
            return self
        return self.map(lambda e: e.shifted(k))

    def transpose(self) -> "Mat":
        return Mat([[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product: block (i, j) is self[i,j] * other."""
        rows = []
        for i in range(self.nrows):
            for k in range(other.nrows):
                row = []
                for j in range(self.ncols):
                    s = self.data[i][j]
                    row.extend(s * e for e in other.data[k])
                rows.append(row)
        return Mat(rows)

    def hstack(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Mat([list(r1) + list(r2) for r1, r2 in zip(self.data, other.data)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat([[self.data[i][j] for j in cols] for i in rows])

    @staticmethod
    def block_diag(blocks: Sequence["Mat"]) -> "Mat":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[RatFunc.zero()] * m for _ in range(n)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[i0 + i][j0 + j] = b.data[i][j]
            i0 += b.nrows
            j0 += b.ncols
        return Mat(rows)

    # -- elimination ---------------------------------------------------------------

    def rref(self) -> Tuple["Mat", Tuple[int, ...]]:
        """Reduced row echelon form with first-nonzero pivoting."""
        rows = [list(r) for r in self.data]
        nr, nc = self.nrows, self.ncols
        pivots: List[int] = []
        r = 0
        for c in range(nc):
            pivot_row = None
            for i in range(r, nr):
                if not rows[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [e * inv for e in rows[r]]
            for i in range(nr):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Mat(rows) if rows else self, tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> List[Tuple[RatFunc, ...]]:
        """Basis of the right kernel, exact; one vector per free column."""
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [RatFunc.zero()] * self.ncols
            v[fc] = RatFunc.one()
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, rhs: "Mat") -> Optional["Mat"]:
        """Particular solution X of self @ X = rhs, or None when inconsistent.

        Free variables are set to zero.
        """
        if rhs.nrows != self.nrows:
            raise ValueError("shape mismatch")
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        nc = self.ncols
        if any(p >= nc for p in pivots):
            return None
        sol = [[RatFunc.zero()] * rhs.ncols for _ in range(nc)]
        for r, pc in enumerate(pivots):
            for k in range(rhs.ncols):
                sol[pc][k] = R.data[r][nc + k]
        return Mat(sol) if sol else Mat.zeros(nc, rhs.ncols)

    def inverse(self) -> "Mat":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        aug = self.hstack(Mat.identity(self.nrows))
        R, pivots = aug.rref()
        if len(pivots) != self.nrows or any(p >= self.nrows for p in pivots):
            raise SingularMatrix("matrix is singular over the function field")
        return R.submatrix(range(self.nrows), range(self.nrows, 2 * self.nrows))

    def det(self) -> RatFunc:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.data]
        n = self.nrows
        det = RatFunc.one()
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if not rows[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return RatFunc.zero()
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                if not rows[i][c].is_zero():
                    f = rows[i][c] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and not self.det().is_zero()

    # -- presentation -----------------------------------------------------------------

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.data) + "]"

    def __repr__(self) -> str:
        return f"Mat({self.rows_list()!r})"

    def to_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.data]


def _dot(row: Sequence[RatFunc], col: Sequence[RatFunc]) -> RatFunc:
    acc = RatFunc.zero()
    for a, b in zip(row, col):
        if not (a.is_zero() or b.is_zero()):
            acc = acc + a * b
    return acc


def kernel_solve(m: Mat, rhs: Optional[Mat] = None):
    """Kernel basis when rhs is None, else a particular solution of m X = rhs.

    Raises ValueError on an inconsistent system.
    """
    if rhs is None:
        return m.kernel()
    sol = m.solve(rhs)
    if sol is None:
        raise ValueError("inconsistent linear system")
    return sol


def mat_from_strings(rows: Sequence[Sequence[str]]) -> Mat:
    from .parser import parse_ratfunc

    return Mat([[parse_ratfunc(e) for e in row] for row in rows])
