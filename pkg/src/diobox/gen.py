"""Seeded random instance generation for the CLI and the test batteries."""

from __future__ import annotations

import random
from fractions import Fraction

from .cone import deep_cone_condition, max_col_norm_squared
from .errors import GenerationFailedError
from .linalg import IntMat, det_exact, dot, gcd_max_minors, inverse_rational
from .solver import ProblemInstance

MODES = ("feasible", "deep", "boundary")

_RETRIES = 1000
_COEFF_RANGE = 5


def _min_shift(p: Fraction, target_sq: Fraction) -> int:
    # smallest integer k >= 0 with p + k >= 0 and (p + k)^2 >= target_sq,
    # found by doubling then bisecting on the exact predicate
    def ok(k: int) -> bool:
        v = p + k
        return v >= 0 and v * v >= target_sq

    if ok(0):
        return 0
    hi = 1
    while not ok(hi):
        hi *= 2
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def push_into_deep_cone(a_mat: IntMat, b: tuple[int, ...]) -> tuple[int, ...]:
    """Translate b along basis columns until the deep-cone test holds.

    Uses the leading m columns as the basis block and adds B k for the
    componentwise-minimal nonnegative integer vector k; every facet margin
    grows by exactly k_i, so the minimal k per facet is found directly.
    """
    m = a_mat.rows
    b_mat = a_mat.select_cols(range(m))
    n_mat = a_mat.select_cols(range(m, a_mat.cols))
    gcd_a = gcd_max_minors(a_mat)
    ratio = Fraction(abs(det_exact(b_mat)), gcd_a)
    t_sq = max_col_norm_squared(n_mat) * (ratio - 1) ** 2
    binv = inverse_rational(b_mat)
    shift = [
        _min_shift(dot(row, b), t_sq * dot(row, row)) for row in binv
    ]
    out = tuple(e + dot(row, shift) for e, row in zip(b, b_mat))
    assert deep_cone_condition(b_mat, n_mat, gcd_a, out).holds
    return out


def generate_instance(
    m: int, n: int, seed: int, mode: str = "feasible", max_entry: int = 10
) -> ProblemInstance:
    """Seeded instance with a nonsingular leading basis block.

    Modes: "feasible" builds b = A x for a random nonnegative x; "deep"
    additionally translates b until the deep-cone condition holds (so a
    nonnegative witness is guaranteed); "boundary" puts b on a facet of the
    cone of the basis block.

    Raises:
        GenerationFailedError: if no usable matrix shows up within the retry
            budget, or the parameters are out of range.
    """
    if mode not in MODES:
        raise GenerationFailedError(f"unknown mode {mode!r}, expected one of {MODES}")
    if m < 1 or n <= m:
        raise GenerationFailedError(f"need n > m >= 1, got m={m} n={n}")
    if max_entry < 1:
        raise GenerationFailedError(f"max_entry must be positive, got {max_entry}")
    rng = random.Random(seed)
    a_mat = None
    for _ in range(_RETRIES):
        cand = IntMat(
            [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(m)]
        )
        if det_exact(cand.select_cols(range(m))) != 0:
            a_mat = cand
            break
    if a_mat is None:
        raise GenerationFailedError(
            f"no nonsingular leading block in {_RETRIES} draws (m={m}, n={n})"
        )
    if mode == "boundary":
        y = [rng.randint(0, _COEFF_RANGE) for _ in range(m)]
        y[rng.randrange(m)] = 0
        b = a_mat.select_cols(range(m)).mul_vec(y)
    else:
        x = [rng.randint(0, _COEFF_RANGE) for _ in range(n)]
        b = a_mat.mul_vec(x)
        if mode == "deep":
            b = push_into_deep_cone(a_mat, b)
    return ProblemInstance(a=a_mat, b=tuple(b))
