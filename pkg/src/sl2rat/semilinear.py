"""Twist-indexed semilinear operators on Q(z)-vector spaces.

A SemiOp (M, k) models the additive map v -> M(z) * v(z + k), which is
semilinear for the k-th power of the shift: op(f * v) = f(z + k) * op(v).
Composition shifts the right factor through the left twist and adds
twists; inversion flips the twist and back-shifts the inverse matrix.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import SingularMatrix, SingularOperator
from .matrix import Mat


@dataclass(frozen=True)
class SemiOp:
    """Matrix over Q(z) together with an integer twist."""

    mat: Mat
    twist: int

    def __post_init__(self):
        if self.mat.nrows != self.mat.ncols:
            raise ValueError("semilinear operators act on a single space; matrix must be square")

    @staticmethod
    def identity(n: int) -> "SemiOp":
        return SemiOp(Mat.identity(n), 0)

    @property
    def dim(self) -> int:
        return self.mat.nrows

    def compose(self, other: "SemiOp") -> "SemiOp":
        """(M, k) after (N, l): matrix M * N(z + k), twist k + l."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in composition")
        return SemiOp(self.mat * other.mat.shifted(self.twist), self.twist + other.twist)

    def invert(self) -> "SemiOp":
        """(M, k)^-1 = (M^-1 shifted by -k, -k)."""
        try:
            inv = self.mat.inverse()
        except SingularMatrix as exc:
            raise SingularOperator("semilinear operator is singular") from exc
        return SemiOp(inv.shifted(-self.twist), -self.twist)

    def apply(self, vec: Mat) -> Mat:
        """Apply to a column vector of functions: M(z) * v(z + k)."""
        if vec.ncols != 1 or vec.nrows != self.dim:
            raise ValueError("expected a column vector of matching dimension")
        return self.mat * vec.shifted(self.twist)

    def __mul__(self, other: "SemiOp") -> "SemiOp":
        return self.compose(other)
