"""End-to-end solver for nonnegative integer solutions of A x = b.

Pipeline: decide integer feasibility through the Hermite normal form, reduce
the projected particular solution into the box of the kernel lattice's
triangular basis, then lift back through the basis block. The lifted point is
always an integer solution; when it is nonnegative the instance is solved,
otherwise the instance is classified integer-feasible only, together with an
exact report saying whether the right-hand side was inside the guaranteed
region (in which case nonnegativity could not have been missed).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .cone import ConditionReport, deep_cone_condition
from .errors import DimensionMismatchError, RankDeficientError, SingularError
from .lattice import box_reduce, integer_solution_set, project_drop_m, special_basis
from .lattice import lattice_determinant
from .linalg import IntMat, det_exact, gcd_max_minors, solve_rational


@dataclass(frozen=True)
class ProblemInstance:
    """System ``a @ x = b`` with optional explicit basis column choice.

    ``basis_cols`` is 0-based here; instance files store it 1-based.
    """

    a: IntMat
    b: tuple[int, ...]
    basis_cols: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.b) != self.a.rows:
            raise DimensionMismatchError(
                f"b has length {len(self.b)}, expected {self.a.rows}"
            )
        if self.a.rows >= self.a.cols:
            raise DimensionMismatchError(
                f"need strictly more columns than rows, got {self.a.rows}x{self.a.cols}"
            )


class SolveStatus(str, Enum):
    NONNEGATIVE = "nonnegative"
    INTEGER_ONLY = "integer_only"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SolveOutcome:
    """Classification plus witness. ``x`` is a solution for the first two
    statuses (nonnegative in the first case); ``report`` carries the deep-cone
    margins when the status is INTEGER_ONLY."""

    status: SolveStatus
    x: tuple[int, ...] | None = None
    report: ConditionReport | None = None


@dataclass(frozen=True)
class BasisPartition:
    """Basis column indices, the induced column order (basis first), and the
    corresponding blocks of A."""

    basis_cols: tuple[int, ...]
    order: tuple[int, ...]
    b_mat: IntMat
    n_mat: IntMat


def select_basis_columns(a_mat: IntMat) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Greedy leftmost choice of m linearly independent columns.

    Returns the chosen indices and the induced column order (chosen columns
    first, the rest in original order). When the first m columns already
    work, the order is the identity.

    Raises:
        RankDeficientError: if fewer than m independent columns exist.
    """
    m, n = a_mat.rows, a_mat.cols
    echelon: list[list[Fraction]] = []
    chosen: list[int] = []
    for j in range(n):
        if len(chosen) == m:
            break
        v = [Fraction(e) for e in a_mat.col(j)]
        for row in echelon:
            lead = next(i for i, e in enumerate(row) if e)
            if v[lead]:
                f = v[lead] / row[lead]
                v = [a - f * b for a, b in zip(v, row)]
        if any(v):
            echelon.append(v)
            chosen.append(j)
    if len(chosen) < m:
        raise RankDeficientError(f"matrix has rank {len(chosen)}, expected {m}")
    order = tuple(chosen) + tuple(j for j in range(n) if j not in set(chosen))
    return tuple(chosen), order


def basis_partition(inst: ProblemInstance) -> BasisPartition:
    """Resolve the basis block of an instance, honoring an explicit choice.

    Raises:
        SingularError: if explicitly chosen columns are singular.
        RankDeficientError: if no nonsingular choice exists.
    """
    a = inst.a
    m, n = a.rows, a.cols
    if inst.basis_cols is not None:
        cols = tuple(inst.basis_cols)
        if len(cols) != m or len(set(cols)) != m or not all(0 <= c < n for c in cols):
            raise DimensionMismatchError(
                f"basis columns must be {m} distinct indices below {n}, got {cols}"
            )
        if det_exact(a.select_cols(cols)) == 0:
            raise SingularError(f"chosen basis columns {cols} are singular")
        order = cols + tuple(j for j in range(n) if j not in set(cols))
    else:
        cols, order = select_basis_columns(a)
    return BasisPartition(
        basis_cols=cols,
        order=order,
        b_mat=a.select_cols(order[:m]),
        n_mat=a.select_cols(order[m:]),
    )


def solve(inst: ProblemInstance) -> SolveOutcome:
    """Classify an instance and produce a witness solution when one exists.

    Steps: integer feasibility via the HNF staircase; box-reduce the
    projection of the particular solution modulo the projected kernel
    lattice, giving the free part w >= 0; lift u through the basis block
    (always integral by construction) and undo the column permutation. If
    u >= 0 the witness is a nonnegative solution; otherwise the instance is
    integer-feasible only and the deep-cone report for b is attached.
    """
    part = basis_partition(inst)
    a = inst.a
    m, n = a.rows, a.cols
    a_perm = a.select_cols(part.order)
    rep = integer_solution_set(a_perm, inst.b)
    if rep is None:
        return SolveOutcome(status=SolveStatus.INFEASIBLE)
    proj = project_drop_m(rep.kernel_basis, m)
    basis = special_basis(proj)
    red = box_reduce(basis.vectors, rep.particular[m:])
    assert all(f.denominator == 1 for f in red.w)
    w = tuple(int(f) for f in red.w)
    assert all(e >= 0 for e in w)
    prod = 1
    for e in w:
        prod *= 1 + e
    assert prod <= lattice_determinant(basis)
    residual = tuple(
        bi - ni for bi, ni in zip(inst.b, part.n_mat.mul_vec(w))
    )
    u_frac = solve_rational(part.b_mat, residual)
    assert all(f.denominator == 1 for f in u_frac)
    u = tuple(int(f) for f in u_frac)
    x_perm = u + w
    x = [0] * n
    for pos, j in enumerate(part.order):
        x[j] = x_perm[pos]
    x = tuple(x)
    assert a.mul_vec(x) == inst.b
    if all(e >= 0 for e in x):
        return SolveOutcome(status=SolveStatus.NONNEGATIVE, x=x)
    report = deep_cone_condition(part.b_mat, part.n_mat, gcd_max_minors(a), inst.b)
    assert not report.holds
    return SolveOutcome(status=SolveStatus.INTEGER_ONLY, x=x, report=report)


def verify(a_mat: IntMat, b: Sequence[int], x: Sequence[int]) -> bool:
    """Whether x is a nonnegative integer solution of ``a_mat @ x = b``.

    Raises:
        DimensionMismatchError: if shapes are inconsistent.
    """
    if len(b) != a_mat.rows:
        raise DimensionMismatchError(f"b has length {len(b)}, expected {a_mat.rows}")
    if len(x) != a_mat.cols:
        raise DimensionMismatchError(f"x has length {len(x)}, expected {a_mat.cols}")
    return all(e >= 0 for e in x) and a_mat.mul_vec(x) == tuple(b)
