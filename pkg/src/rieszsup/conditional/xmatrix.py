from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from rieszsup.atoms import BandProjection, Element, add, int_power, leq, mul, sum_all
from rieszsup.errors import DimensionMismatch, ShapeMismatch

from .cond_exp import CondExp

__doc__ = """
Matrices with entries in X and the positive semi-definite calculus on them.

An `XMatrix` holds finite elements of a common dimension. Every atom
evaluation turns it into a rational matrix; it is positive semi-definite when
all of those are, which is decided exactly through principal minors.
"""


@dataclass(frozen=True, slots=True)
class XMatrix:
    """
    Rectangular array of finite elements.

    Parameters
    ----------
    entries : tuple[tuple[Element, ...], ...]
        Row-major entries; rows must have equal length.
    """

    entries: tuple[tuple[Element, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if not rows or not rows[0]:
            raise ShapeMismatch("an XMatrix needs at least one entry")
        if len({len(r) for r in rows}) != 1:
            raise ShapeMismatch("rows of an XMatrix must have equal length")
        dims = {e.dim for r in rows for e in r}
        if len(dims) != 1:
            a, b = sorted(dims)[:2]
            raise DimensionMismatch(a, b, op="XMatrix")
        if not all(e.is_finite() for r in rows for e in r):
            raise ValueError("XMatrix entries must be finite")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Element]]) -> XMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @property
    def dim(self) -> int:
        return self.entries[0][0].dim

    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> XMatrix:
        rows, cols = self.shape
        return XMatrix(
            tuple(tuple(self.entries[i][j] for i in range(rows)) for j in range(cols))
        )

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> XMatrix:
        return XMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def at_atom(self, atom: int) -> np.ndarray:
        """The rational matrix (m_ij(atom)) as an object array of Fractions."""
        return np.array(
            [[e[atom] for e in row] for row in self.entries], dtype=object
        )

    def compress(
        self, row_blocks: Sequence[Sequence[int]], col_blocks: Sequence[Sequence[int]]
    ) -> XMatrix:
        """Replace each block A_kl by its entry sum Gamma(A_kl)."""
        return XMatrix(
            tuple(
                tuple(gamma(self.submatrix(rb, cb)) for cb in col_blocks)
                for rb in row_blocks
            )
        )


def gamma(m: XMatrix) -> Element:
    """Gamma(M): the sum of all entries."""
    return sum_all((e for row in m.entries for e in row), m.dim)


def exact_det(a: np.ndarray) -> Fraction:
    """Determinant of a square object array of Fractions by exact elimination."""
    n = a.shape[0]
    work = [[Fraction(a[i, j]) for j in range(n)] for i in range(n)]
    sign = 1
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        p = work[col][col]
        det *= p
        for r in range(col + 1, n):
            factor = work[r][col] / p
            if factor:
                for c in range(col, n):
                    work[r][c] -= factor * work[col][c]
    return det * sign


def is_psd_rational(a: np.ndarray) -> bool:
    """Exact PSD test: symmetric with every principal minor nonnegative."""
    n = a.shape[0]
    if a.shape != (n, n) or not (a == a.T).all():
        return False
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            if exact_det(a[np.ix_(idx, idx)]) < 0:
                return False
    return True


def det(m: XMatrix) -> Element:
    """
    Coordinatewise determinant.

    Raises
    ------
    ShapeMismatch
        If M is not square.
    """
    if not m.is_square():
        raise ShapeMismatch(f"determinant of a {m.shape} matrix")
    return Element(tuple(exact_det(m.at_atom(w)) for w in range(m.dim)))


def is_psd(m: XMatrix) -> bool:
    """True iff M is symmetric and every atom evaluation is PSD."""
    if not m.is_symmetric():
        return False
    return all(is_psd_rational(m.at_atom(w)) for w in range(m.dim))


def quadratic_form(m: XMatrix, xs: Sequence[Element]) -> Element:
    """sum_ij m_ij x_i x_j for a tuple of finite elements."""
    n, _ = m.shape
    if len(xs) != n:
        raise ShapeMismatch(f"need {n} elements, got {len(xs)}")
    return sum_all(
        (mul(mul(m[i, j], xs[i]), xs[j]) for i in range(n) for j in range(n)), m.dim
    )


def block_gamma_check(m: XMatrix, split: int) -> bool:
    """
    Gamma(C)^2 <= Gamma(A) Gamma(B) for M = [[A, C], [C^t, B]].

    Raises
    ------
    ShapeMismatch
        If M is not square or `split` does not cut it into two nonempty blocks.
    """
    n, cols = m.shape
    if n != cols or not 0 < split < n:
        raise ShapeMismatch(f"cannot split a {m.shape} matrix at {split}")
    top, bottom = range(split), range(split, n)
    a = gamma(m.submatrix(top, top))
    b = gamma(m.submatrix(bottom, bottom))
    c = gamma(m.submatrix(top, bottom))
    return leq(int_power(c, 2), mul(a, b))


def gram_matrix(t: CondExp, qs: Sequence[BandProjection]) -> XMatrix:
    """M = (T Q_i Q_j e)_{ij}."""
    return XMatrix(tuple(tuple(t.apply((qi & qj).unit()) for qj in qs) for qi in qs))


def add_matrices(a: XMatrix, b: XMatrix) -> XMatrix:
    if a.shape != b.shape:
        raise ShapeMismatch(f"{a.shape} vs {b.shape}")
    return XMatrix(
        tuple(
            tuple(add(x, y) for x, y in zip(ra, rb))
            for ra, rb in zip(a.entries, b.entries)
        )
    )
