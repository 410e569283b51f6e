"""Integer solution sets of linear systems and lattice box reduction.

The integer solutions of ``A x = b`` (A integer, full row rank m, n columns)
form either the empty set or an affine lattice ``r + L`` where L is the rank
``n - m`` kernel lattice of A. Dropping the first m coordinates maps L
bijectively onto a full-rank lattice in ``Z^(n-m)`` whenever the first m
columns of A are nonsingular; that projected lattice has a unique
lower-triangular basis with positive diagonal and reduced subdiagonal
entries, and reducing a point into the half-open box spanned by the
Gram-Schmidt vectors of that basis is the core step of the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, RankDeficientError, SingularError
from .linalg import IntMat, dot, hnf_column


@dataclass(frozen=True)
class AffineLatticeRep:
    """A particular integer solution plus a basis of the kernel lattice."""

    particular: tuple[int, ...]
    kernel_basis: tuple[tuple[int, ...], ...]


def integer_solution_set(mat: IntMat, rhs: Sequence[int]) -> AffineLatticeRep | None:
    """Describe all integer solutions of ``mat @ x = rhs``.

    Returns None when the system has no integer solution (some staircase
    pivot fails to divide its back-substituted right-hand side), otherwise a
    particular solution together with ``n - m`` kernel basis vectors.

    Raises:
        RankDeficientError: if the rows of ``mat`` are linearly dependent.
        DimensionMismatchError: if ``rhs`` has the wrong length.
    """
    m, n = mat.rows, mat.cols
    if len(rhs) != m:
        raise DimensionMismatchError(f"rhs length {len(rhs)}, expected {m}")
    res = hnf_column(mat)
    h, u = res.h, res.u
    y: list[Fraction] = []
    for i in range(m):
        acc = Fraction(rhs[i])
        for j in range(i):
            acc -= h[i][j] * y[j]
        yi = acc / h[i][i]
        if yi.denominator != 1:
            return None
        y.append(yi)
    coeffs = [int(v) for v in y] + [0] * (n - m)
    particular = u.mul_vec(coeffs)
    kernel = tuple(u.col(j) for j in range(m, n))
    assert mat.mul_vec(particular) == tuple(rhs)
    return AffineLatticeRep(tuple(particular), kernel)


def project_drop_m(vectors: Sequence[Sequence[int]], m: int) -> tuple[tuple[int, ...], ...]:
    """Drop the first ``m`` coordinates of every vector."""
    out = []
    for i, v in enumerate(vectors):
        if len(v) <= m:
            raise DimensionMismatchError(f"vector {i} has length {len(v)}, need > {m}")
        out.append(tuple(v[m:]))
    return tuple(out)


@dataclass(frozen=True)
class SpecialBasis:
    """Lower-triangular lattice basis: vectors[i][i] > 0, zeros above the
    diagonal, and 0 <= vectors[i][j] < vectors[j][j] for j < i. This basis is
    unique for a given full-rank lattice."""

    vectors: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(v[i] for i, v in enumerate(self.vectors))


def special_basis(vectors: Sequence[Sequence[int]]) -> SpecialBasis:
    """Compute the unique reduced lower-triangular basis of a lattice.

    ``vectors`` are d linearly independent integer vectors of length d
    spanning the lattice. The result spans the same lattice.

    Raises:
        DimensionMismatchError: if the vectors do not form a square system.
        SingularError: if the vectors are linearly dependent.
    """
    vecs = [tuple(v) for v in vectors]
    d = len(vecs)
    for i, v in enumerate(vecs):
        if len(v) != d:
            raise DimensionMismatchError(f"vector {i} has length {len(v)}, expected {d}")
    # Reverse coordinates, take the row-style HNF (transpose of the column
    # form), then reverse back: the staircase lands on the lower triangle
    # with the reduction running below the diagonal instead of above it.
    rev = IntMat([v[::-1] for v in vecs])
    try:
        res = hnf_column(rev.transpose())
    except RankDeficientError as exc:
        raise SingularError("basis vectors are linearly dependent") from exc
    hrow = res.h.transpose()
    out = tuple(tuple(hrow[d - 1 - i][::-1]) for i in range(d))
    for i in range(d):
        assert out[i][i] > 0
        assert all(out[i][j] == 0 for j in range(i + 1, d))
        assert all(0 <= out[i][j] < out[j][j] for j in range(i))
    return SpecialBasis(out)


def lattice_determinant(basis: SpecialBasis) -> int:
    """Determinant of the lattice spanned by a reduced triangular basis."""
    prod = 1
    for v in basis.diagonal:
        prod *= v
    return prod


@dataclass(frozen=True)
class GramSchmidtData:
    """Orthogonalization ``ortho`` plus the projection coefficients ``mu``;
    ``mu[i]`` holds the i coefficients of vector i against ortho[0..i-1]."""

    ortho: tuple[tuple[Fraction, ...], ...]
    mu: tuple[tuple[Fraction, ...], ...]


def gram_schmidt(vectors: Sequence[Sequence]) -> GramSchmidtData:
    """Exact Gram-Schmidt orthogonalization over the rationals.

    Raises:
        SingularError: if the vectors are linearly dependent.
        DimensionMismatchError: if vector lengths differ.
    """
    vecs = [tuple(Fraction(e) for e in v) for v in vectors]
    if not vecs:
        raise DimensionMismatchError("need at least one vector")
    width = len(vecs[0])
    ortho: list[tuple[Fraction, ...]] = []
    norms: list[Fraction] = []
    mu: list[tuple[Fraction, ...]] = []
    for i, b in enumerate(vecs):
        if len(b) != width:
            raise DimensionMismatchError(f"vector {i} has length {len(b)}, expected {width}")
        cur = list(b)
        coeffs = []
        for j in range(i):
            m_ij = dot(b, ortho[j]) / norms[j]
            coeffs.append(m_ij)
            cur = [c - m_ij * g for c, g in zip(cur, ortho[j])]
        if not any(cur):
            raise SingularError(f"vector {i} is dependent on the previous ones")
        ortho.append(tuple(cur))
        norms.append(dot(cur, cur))
        mu.append(tuple(coeffs))
    return GramSchmidtData(tuple(ortho), tuple(mu))


@dataclass(frozen=True)
class BoxReduction:
    """Decomposition ``x = y + w`` with y in the lattice and w in the
    half-open Gram-Schmidt box of the basis."""

    y: tuple
    w: tuple[Fraction, ...]


def box_reduce(vectors: Sequence[Sequence[int]], point: Sequence) -> BoxReduction:
    """Reduce ``point`` modulo the lattice into the Gram-Schmidt box.

    Sweeping i from last to first, subtract ``floor(lambda_i)`` copies of
    basis vector i, where lambda_i is the coefficient of ``point`` against
    the i-th Gram-Schmidt vector. Afterwards every coefficient lies in
    [0, 1), so w sits in the half-open box spanned by the orthogonalized
    basis. The result depends only on the coset ``point + L``, never on the
    representative.

    Raises:
        DimensionMismatchError: if the basis is not square or the point has
            the wrong length.
        SingularError: if the basis vectors are dependent.
    """
    vecs = [tuple(v) for v in vectors]
    d = len(vecs)
    for i, v in enumerate(vecs):
        if len(v) != d:
            raise DimensionMismatchError(f"basis vector {i} has length {len(v)}, expected {d}")
    if len(point) != d:
        raise DimensionMismatchError(f"point has length {len(point)}, expected {d}")
    gs = gram_schmidt(vecs)
    norms = [dot(g, g) for g in gs.ortho]
    cur = [Fraction(c) for c in point]
    shift = [0] * d
    for i in reversed(range(d)):
        lam = dot(cur, gs.ortho[i]) / norms[i]
        k = math.floor(lam)
        if k:
            cur = [c - k * e for c, e in zip(cur, vecs[i])]
            shift = [s + k * e for s, e in zip(shift, vecs[i])]
    return BoxReduction(y=tuple(shift), w=tuple(cur))
