"""Exact solver for nonnegative integer solutions of linear Diophantine
systems, built on Hermite normal forms and lattice box reduction."""

from .cone import (
    ConditionReport,
    FacetCheck,
    aliev_henk_p,
    aliev_henk_t_bound,
    deep_cone_condition,
    in_cone,
    shifted_cone_condition_m2,
)
from .errors import (
    CapExceededError,
    DimensionMismatchError,
    DioboxError,
    GcdNotOneError,
    GenerationFailedError,
    InstanceFormatError,
    NonPositiveEntryError,
    NotSquareError,
    RankDeficientError,
    SingularError,
    WrongRowCountError,
)
from .frobenius import box_shape, brauer_G, f_chain, frobenius_number_dp
from .gen import generate_instance
from .lattice import (
    AffineLatticeRep,
    BoxReduction,
    GramSchmidtData,
    SpecialBasis,
    box_reduce,
    gram_schmidt,
    integer_solution_set,
    lattice_determinant,
    project_drop_m,
    special_basis,
)
from .linalg import (
    HnfResult,
    IntMat,
    det_exact,
    gcd_max_minors,
    hnf_column,
    inverse_rational,
    solve_rational,
    xgcd,
)
from .oracle import BruteForceResult, EnumerationBudget, brute_force_all, brute_force_solve
from .solver import (
    BasisPartition,
    ProblemInstance,
    SolveOutcome,
    SolveStatus,
    basis_partition,
    select_basis_columns,
    solve,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AffineLatticeRep",
    "BasisPartition",
    "BoxReduction",
    "BruteForceResult",
    "CapExceededError",
    "ConditionReport",
    "DimensionMismatchError",
    "DioboxError",
    "EnumerationBudget",
    "FacetCheck",
    "GcdNotOneError",
    "GenerationFailedError",
    "GramSchmidtData",
    "HnfResult",
    "InstanceFormatError",
    "IntMat",
    "NonPositiveEntryError",
    "NotSquareError",
    "ProblemInstance",
    "RankDeficientError",
    "SingularError",
    "SolveOutcome",
    "SolveStatus",
    "SpecialBasis",
    "WrongRowCountError",
    "aliev_henk_p",
    "aliev_henk_t_bound",
    "box_reduce",
    "box_shape",
    "brauer_G",
    "brute_force_all",
    "brute_force_solve",
    "basis_partition",
    "deep_cone_condition",
    "det_exact",
    "f_chain",
    "frobenius_number_dp",
    "gcd_max_minors",
    "generate_instance",
    "gram_schmidt",
    "hnf_column",
    "in_cone",
    "integer_solution_set",
    "inverse_rational",
    "lattice_determinant",
    "project_drop_m",
    "select_basis_columns",
    "shifted_cone_condition_m2",
    "solve",
    "solve_rational",
    "special_basis",
    "verify",
    "xgcd",
]
