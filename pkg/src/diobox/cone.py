"""Simplicial cone membership and depth conditions, all radical-free.

For a nonsingular integer matrix B the cone C_B is the set of nonnegative
real combinations of its columns. Membership and "distance at least t from
every facet" are decided exactly by comparing squared rationals, so no
square root is ever taken on the decision path. The only float in this
module is the explicitly approximate diagnostic bound at the bottom.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    RankDeficientError,
    SingularError,
    WrongRowCountError,
)
from .linalg import IntMat, det_exact, dot, inverse_rational, solve_rational


@dataclass(frozen=True)
class FacetCheck:
    """Squared margin comparison for one facet of a simplicial cone.

    The facet passes when the point is on the inner side (lhs_nonnegative)
    and its squared distance to the facet hyperplane is at least the squared
    threshold, i.e. lhs_squared >= rhs_squared.
    """

    facet: int
    lhs_squared: Fraction
    rhs_squared: Fraction
    lhs_nonnegative: bool

    @property
    def satisfied(self) -> bool:
        return self.lhs_nonnegative and self.lhs_squared >= self.rhs_squared


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    threshold_squared: Fraction
    facets: tuple[FacetCheck, ...]


def max_col_norm_squared(mat: IntMat) -> int:
    """Largest squared Euclidean column norm."""
    return max(sum(e * e for e in mat.col(j)) for j in range(mat.cols))


def in_cone(b_mat: IntMat, point: Sequence[int]) -> bool:
    """Whether ``point`` lies in the cone spanned by the columns of ``b_mat``.

    Raises:
        SingularError: if ``b_mat`` is singular (the cone is not simplicial).
    """
    if det_exact(b_mat) == 0:
        raise SingularError("cone matrix is singular")
    return all(c >= 0 for c in solve_rational(b_mat, point))


def deep_cone_condition(
    b_mat: IntMat, n_mat: IntMat, gcd_a: int, rhs: Sequence[int]
) -> ConditionReport:
    """Exact test that ``rhs`` lies in C_B at depth t = l_N * (D - 1).

    Here D = |det B| / gcd_a and l_N is the largest Euclidean column norm of
    ``n_mat``. A point x of the simplicial cone C_B has distance
    ``(B^-1 x)_i / ||row_i(B^-1)||`` to the i-th facet hyperplane, because
    that facet is ``{y : (B^-1 y)_i = 0}`` with normal row_i(B^-1). So x is
    at depth t iff for every i: ``(B^-1 x)_i >= 0`` and
    ``(B^-1 x)_i^2 >= t^2 * ||row_i(B^-1)||^2``, which compares pure
    rationals. When the report holds for a right-hand side that is integer
    feasible, the solver's box-reduced point is guaranteed nonnegative.

    Raises:
        SingularError: if ``b_mat`` is singular.
        ValueError: if ``gcd_a`` is not positive.
    """
    if gcd_a < 1:
        raise ValueError(f"gcd must be a positive integer, got {gcd_a}")
    det = det_exact(b_mat)
    if det == 0:
        raise SingularError("basis block is singular")
    if b_mat.rows != n_mat.rows:
        raise DimensionMismatchError(
            f"basis block has {b_mat.rows} rows, remaining block {n_mat.rows}"
        )
    ratio = Fraction(abs(det), gcd_a)
    ln_sq = max_col_norm_squared(n_mat)
    t_sq = ln_sq * (ratio - 1) ** 2
    binv = inverse_rational(b_mat)
    coords = tuple(dot(row, rhs) for row in binv)
    checks = []
    for i, (p, row) in enumerate(zip(coords, binv)):
        checks.append(
            FacetCheck(
                facet=i,
                lhs_squared=p * p,
                rhs_squared=t_sq * dot(row, row),
                lhs_nonnegative=p >= 0,
            )
        )
    return ConditionReport(
        holds=all(c.satisfied for c in checks),
        threshold_squared=t_sq,
        facets=tuple(checks),
    )


def shifted_cone_condition_m2(
    a_mat: IntMat, b_mat: IntMat, n_mat: IntMat, rhs: Sequence[int]
) -> ConditionReport | None:
    """Two-row test: does ``rhs`` lie in the shifted cone s*v + C_B?

    Only defined when the cone of all columns equals C_B; returns None when
    some column of ``n_mat`` falls outside C_B (test not applicable). Here
    v is the sum of all columns of ``a_mat`` and
    ``s = l_B * l_N * (|det B| - 1) / |det B|``. Membership of ``rhs - s*v``
    in C_B is decided facet by facet on squares: with c = (|det B|-1)/|det B|
    * (B^-1 v), facet i requires ``(B^-1 rhs)_i >= l_B*l_N*c_i``, compared as
    ``lhs >= 0`` and ``lhs^2 >= l_B^2*l_N^2*c_i^2`` (c_i >= 0 once the cone
    equality holds).

    Raises:
        WrongRowCountError: if the system does not have exactly two rows.
        SingularError: if ``b_mat`` is singular.
    """
    if a_mat.rows != 2:
        raise WrongRowCountError(f"shifted-cone test needs 2 rows, got {a_mat.rows}")
    det = det_exact(b_mat)
    if det == 0:
        raise SingularError("basis block is singular")
    binv = inverse_rational(b_mat)
    for j in range(n_mat.cols):
        col = n_mat.col(j)
        if any(dot(row, col) < 0 for row in binv):
            return None
    v = tuple(sum(a_mat.row(i)) for i in range(2))
    lb_sq = max_col_norm_squared(b_mat)
    ln_sq = max_col_norm_squared(n_mat)
    factor = Fraction(abs(det) - 1, abs(det))
    shift_sq = lb_sq * ln_sq * factor * factor
    coords = tuple(dot(row, rhs) for row in binv)
    vcoords = tuple(dot(row, v) for row in binv)
    checks = []
    for i in range(2):
        p = coords[i]
        c = factor * vcoords[i]
        assert c >= 0
        checks.append(
            FacetCheck(
                facet=i,
                lhs_squared=p * p,
                rhs_squared=lb_sq * ln_sq * c * c,
                lhs_nonnegative=p >= 0,
            )
        )
    return ConditionReport(
        holds=all(c.satisfied for c in checks),
        threshold_squared=shift_sq,
        facets=tuple(checks),
    )


def aliev_henk_p(m: int, n: int) -> float:
    """Dimension factor sqrt((n - m) * n / 2) used by the diagnostic bound."""
    return math.sqrt((n - m) * n / 2)


def aliev_henk_t_bound(a_mat: IntMat) -> float:
    """Approximate upper bound 2^((n-m)/2 - 1) * p(m, n) * sqrt(det(A A^T)).

    Purely diagnostic: a float estimate of how deep the guaranteed region
    sits, never used on any decision path.

    Raises:
        RankDeficientError: if the rows are linearly dependent.
    """
    m, n = a_mat.rows, a_mat.cols
    gram = det_exact(a_mat @ a_mat.transpose())
    if gram <= 0:
        raise RankDeficientError("rows are linearly dependent")
    return 2.0 ** ((n - m) / 2 - 1) * aliev_henk_p(m, n) * math.sqrt(gram)
