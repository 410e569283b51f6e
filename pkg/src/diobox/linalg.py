"""Exact integer and rational linear algebra.

Everything here runs on Python's arbitrary-precision ``int`` and on
``fractions.Fraction``. There is no floating point and no tolerance in this
module; equality means equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    NotSquareError,
    RankDeficientError,
    SingularError,
)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(a, b) >= 0`` and ``s*a + t*b = g``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def dot(u: Sequence, v: Sequence):
    """Inner product of two equal-length vectors (int or Fraction entries)."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"dot of lengths {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


class IntMat:
    """Immutable dense matrix of arbitrary-precision integers.

    Shape is fixed at construction and entries are stored as a tuple of row
    tuples, so instances are safe to share and to use as dict keys. ``rows``
    and ``cols`` are the dimensions; indexing yields row tuples.
    """

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatchError("matrix needs at least one row and one column")
        width = len(data[0])
        for i, row in enumerate(data):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"row {i} has length {len(row)}, expected {width}"
                )
            for j, e in enumerate(row):
                if not isinstance(e, int) or isinstance(e, bool):
                    raise TypeError(f"entry ({i},{j}) is {type(e).__name__}, expected int")
        self._data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[int]]) -> "IntMat":
        if not cols:
            raise DimensionMismatchError("need at least one column")
        return cls(zip(*cols))

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMat) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMat({[list(r) for r in self._data]})"

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def transpose(self) -> "IntMat":
        return IntMat(zip(*self._data))

    def select_cols(self, idx: Sequence[int]) -> "IntMat":
        return IntMat([[row[j] for j in idx] for row in self._data])

    def __matmul__(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = other.transpose()
        return IntMat(
            [[dot(r, c) for c in ot] for r in self._data]
        )

    def mul_vec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by vector of length {len(v)}"
            )
        return tuple(dot(row, v) for row in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]


@dataclass(frozen=True)
class HnfResult:
    h: IntMat
    u: IntMat


def hnf_column(mat: IntMat) -> HnfResult:
    """Column-style Hermite normal form with its unimodular transform.

    Returns ``(h, u)`` with ``mat @ u == h`` and ``|det u| = 1``. For a
    full-row-rank m x n input, ``h`` is ``(L | 0)`` with L lower triangular,
    positive diagonal, and every entry left of a pivot reduced into
    ``[0, pivot)``. That shape is unique, so ``h`` is canonical; ``u`` is one
    valid transform among many.

    Raises:
        RankDeficientError: if the rows are linearly dependent.
    """
    m, n = mat.rows, mat.cols
    if m > n:
        raise RankDeficientError(f"a {m}x{n} matrix cannot have full row rank")
    h = [list(row) for row in mat]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(i: int, j: int, s: int, t: int, p: int, q: int) -> None:
        # cols (i, j) <- (s*ci + t*cj, q*cj - p*ci); the 2x2 transform has det 1
        for block in (h, u):
            for row in block:
                ci, cj = row[i], row[j]
                row[i] = s * ci + t * cj
                row[j] = q * cj - p * ci

    def add_multiple(j: int, i: int, q: int) -> None:
        # col j -= q * col i
        if q == 0:
            return
        for block in (h, u):
            for row in block:
                row[j] -= q * row[i]

    for i in range(m):
        for j in range(i + 1, n):
            if h[i][j] == 0:
                continue
            a, b = h[i][i], h[i][j]
            g, s, t = xgcd(a, b)
            combine(i, j, s, t, b // g, a // g)
        if h[i][i] < 0:
            for block in (h, u):
                for row in block:
                    row[i] = -row[i]
        if h[i][i] == 0:
            raise RankDeficientError("rows are linearly dependent")
        for j in range(i):
            add_multiple(j, i, h[i][j] // h[i][i])
    return HnfResult(IntMat(h), IntMat(u))


def det_exact(mat: IntMat) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    Raises:
        NotSquareError: if the matrix is not square.
    """
    if mat.rows != mat.cols:
        raise NotSquareError(f"determinant of a {mat.rows}x{mat.cols} matrix")
    n = mat.rows
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by the Bareiss identity: prev divides the numerator
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def gcd_max_minors(mat: IntMat) -> int:
    """gcd of all maximal (rows x rows) minors, always positive.

    Computed as the product of the HNF pivots: column operations with a
    unimodular transform leave the gcd of maximal minors unchanged, and for
    the staircase form that gcd is the product of the diagonal.

    Raises:
        RankDeficientError: if the matrix does not have full row rank
            (all maximal minors vanish, the gcd is not defined here).
    """
    h = hnf_column(mat).h
    g = 1
    for i in range(mat.rows):
        g *= h[i][i]
    return g


def solve_rational(mat: IntMat, rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve ``mat @ x = rhs`` exactly over the rationals.

    Raises:
        NotSquareError: if the matrix is not square.
        DimensionMismatchError: if the right-hand side has the wrong length.
        SingularError: if the matrix is singular.
    """
    if mat.rows != mat.cols:
        raise NotSquareError(f"solve with a {mat.rows}x{mat.cols} matrix")
    n = mat.rows
    if len(rhs) != n:
        raise DimensionMismatchError(f"rhs length {len(rhs)}, expected {n}")
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [e / pv for e in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [e - f * p for e, p in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def inverse_rational(mat: IntMat) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse as a tuple of Fraction rows.

    Raises:
        NotSquareError: if the matrix is not square.
        SingularError: if the matrix is singular.
    """
    if mat.rows != mat.cols:
        raise NotSquareError(f"inverse of a {mat.rows}x{mat.cols} matrix")
    n = mat.rows
    a = [
        [Fraction(mat[i][j]) for j in range(n)]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [e / pv for e in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [e - f * p for e, p in zip(a[r], a[col])]
    return tuple(tuple(a[i][n:]) for i in range(n))
