import random
from fractions import Fraction

import pytest

from diobox import (
    DimensionMismatchError,
    IntMat,
    RankDeficientError,
    SingularError,
    box_reduce,
    det_exact,
    gcd_max_minors,
    gram_schmidt,
    integer_solution_set,
    lattice_determinant,
    project_drop_m,
    special_basis,
    solve_rational,
)
from diobox.linalg import dot


def _random_full_rank(rng, m, n, bound=9):
    while True:
        mat = IntMat([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)])
        try:
            gcd_max_minors(mat)
        except RankDeficientError:
            continue
        return mat


def _spans_same_lattice(vecs_a, vecs_b):
    # each side must be an integer combination of the other
    d = len(vecs_a)
    mat_a = IntMat(vecs_a).transpose()
    mat_b = IntMat(vecs_b).transpose()
    for mat, vecs in ((mat_a, vecs_b), (mat_b, vecs_a)):
        for v in vecs:
            coeffs = solve_rational(mat, v)
            if any(c.denominator != 1 for c in coeffs):
                return False
    return True


def test_integer_solution_set_single_row():
    a = IntMat([[2, 3]])
    rep = integer_solution_set(a, (1,))
    assert rep is not None
    assert a.mul_vec(rep.particular) == (1,)
    assert len(rep.kernel_basis) == 1
    assert rep.kernel_basis[0] in ((3, -2), (-3, 2))


def test_integer_solution_set_infeasible():
    assert integer_solution_set(IntMat([[2, 4]]), (3,)) is None
    rep = integer_solution_set(IntMat([[2, 4]]), (6,))
    assert rep is not None and IntMat([[2, 4]]).mul_vec(rep.particular) == (6,)


def test_integer_solution_set_two_rows():
    a = IntMat([[1, 0, 1], [0, 1, 1]])
    rep = integer_solution_set(a, (2, 2))
    assert rep is not None
    assert a.mul_vec(rep.particular) == (2, 2)
    assert len(rep.kernel_basis) == 1
    assert rep.kernel_basis[0] in ((-1, -1, 1), (1, 1, -1))


def test_integer_solution_set_errors():
    with pytest.raises(RankDeficientError):
        integer_solution_set(IntMat([[1, 2, 3], [2, 4, 6]]), (1, 2))
    with pytest.raises(DimensionMismatchError):
        integer_solution_set(IntMat([[1, 2]]), (1, 2))


def test_integer_solution_set_random_consistency():
    # every kernel vector annihilates A; particular solves exactly
    rng = random.Random(11)
    for _ in range(150):
        m = rng.randint(1, 3)
        n = rng.randint(m + 1, 6)
        a = _random_full_rank(rng, m, n)
        x = tuple(rng.randint(-6, 6) for _ in range(n))
        b = a.mul_vec(x)
        rep = integer_solution_set(a, b)
        assert rep is not None  # b was built from an integer point
        assert a.mul_vec(rep.particular) == b
        assert len(rep.kernel_basis) == n - m
        for g in rep.kernel_basis:
            assert a.mul_vec(g) == (0,) * m


def test_project_drop_m():
    assert project_drop_m([(5, 2, 3)], 1) == ((2, 3),)
    assert project_drop_m([(1, 1, -3)], 2) == ((-3,),)
    assert project_drop_m([(1, 2, 3, 4), (5, 6, 7, 8)], 2) == ((3, 4), (7, 8))
    with pytest.raises(DimensionMismatchError):
        project_drop_m([(1, 2)], 2)


def test_projected_kernel_example():
    # kernel of [[3,0,1],[0,3,1]] is spanned by (1,1,-3); dropping m=2 gives (-3)
    a = IntMat([[3, 0, 1], [0, 3, 1]])
    rep = integer_solution_set(a, (0, 0))
    proj = project_drop_m(rep.kernel_basis, 2)
    assert proj in (((-3,),), ((3,),))


def test_special_basis_identity():
    sb = special_basis([(1, 0), (0, 1)])
    assert sb.vectors == ((1, 0), (0, 1))
    assert sb.diagonal == (1, 1)


def test_special_basis_examples():
    sb = special_basis([(5, 0), (-4, 1)])
    assert sb.vectors == ((5, 0), (1, 1))
    # order of the input vectors is irrelevant
    sb = special_basis([(1, 1), (2, 0)])
    assert sb.vectors == ((2, 0), (1, 1))


def test_special_basis_singular():
    with pytest.raises(SingularError):
        special_basis([(1, 2), (2, 4)])
    with pytest.raises(DimensionMismatchError):
        special_basis([(1, 2, 3), (4, 5, 6)])


def test_special_basis_properties():
    rng = random.Random(12)
    done = 0
    while done < 200:
        d = rng.randint(1, 5)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(d)]
        if det_exact(IntMat(vecs)) == 0:
            continue
        sb = special_basis(vecs)
        out = sb.vectors
        # triangular shape with reduced subdiagonal entries
        for i in range(d):
            assert out[i][i] > 0
            assert all(out[i][j] == 0 for j in range(i + 1, d))
            assert all(0 <= out[i][j] < out[j][j] for j in range(i))
        assert _spans_same_lattice(list(vecs), list(out))
        # uniqueness: reapplying is a fixed point
        assert special_basis(out).vectors == out
        assert abs(det_exact(IntMat(vecs))) == lattice_determinant(sb)
        done += 1


def test_lattice_determinant_examples():
    assert lattice_determinant(special_basis([(5, 0), (1, 1)])) == 5
    assert lattice_determinant(special_basis([(1, 0), (0, 1)])) == 1


def test_gram_schmidt_orthogonal_input():
    gs = gram_schmidt([(3, 0), (0, 2)])
    assert gs.ortho == ((3, 0), (0, 2))
    assert gs.mu == ((), (Fraction(0),))


def test_gram_schmidt_examples():
    gs = gram_schmidt([(5, 0), (1, 1)])
    assert gs.ortho[0] == (5, 0)
    assert gs.ortho[1] == (0, 1)
    assert gs.mu[1] == (Fraction(1, 5),)

    gs = gram_schmidt([(1, 1), (0, 1)])
    assert gs.ortho[1] == (Fraction(-1, 2), Fraction(1, 2))
    assert gs.mu[1] == (Fraction(1, 2),)


def test_gram_schmidt_dependent():
    with pytest.raises(SingularError):
        gram_schmidt([(1, 2), (2, 4)])


def test_gram_schmidt_reconstruction():
    rng = random.Random(13)
    done = 0
    while done < 150:
        d = rng.randint(1, 5)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(d)]
        if det_exact(IntMat(vecs)) == 0:
            continue
        gs = gram_schmidt(vecs)
        for i in range(d):
            rebuilt = list(gs.ortho[i])
            for j in range(i):
                rebuilt = [r + gs.mu[i][j] * g for r, g in zip(rebuilt, gs.ortho[j])]
            assert tuple(rebuilt) == tuple(Fraction(e) for e in vecs[i])
        for i in range(d):
            for j in range(i):
                assert dot(gs.ortho[i], gs.ortho[j]) == 0
        done += 1


def test_box_reduce_examples():
    basis = [(5, 0), (1, 1)]
    red = box_reduce(basis, (7, 0))
    assert red.y == (5, 0)
    assert red.w == (2, 0)

    red = box_reduce(basis, (2, 0))  # already inside the box
    assert red.y == (0, 0)
    assert red.w == (2, 0)

    red = box_reduce(basis, (-1, -1))
    assert red.y == (-1, -1)
    assert red.w == (0, 0)


def test_box_reduce_errors():
    with pytest.raises(DimensionMismatchError):
        box_reduce([(1, 0), (0, 1)], (1, 2, 3))
    with pytest.raises(SingularError):
        box_reduce([(1, 2), (2, 4)], (1, 1))


def test_box_reduce_box_membership():
    # Gram-Schmidt coordinates of w always land in [0, 1)
    rng = random.Random(14)
    done = 0
    while done < 200:
        d = rng.randint(1, 4)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(d)]
        if det_exact(IntMat(vecs)) == 0:
            continue
        x = tuple(rng.randint(-40, 40) for _ in range(d))
        red = box_reduce(vecs, x)
        assert tuple(a + b for a, b in zip(red.y, red.w)) == x
        gs = gram_schmidt(vecs)
        for i in reversed(range(d)):
            lam = dot(red.w, gs.ortho[i]) / dot(gs.ortho[i], gs.ortho[i])
            assert 0 <= lam < 1
        done += 1


def test_box_reduce_coset_determinism():
    # the box representative depends on the coset only
    rng = random.Random(15)
    done = 0
    while done < 150:
        d = rng.randint(1, 4)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(d)]
        if det_exact(IntMat(vecs)) == 0:
            continue
        x = tuple(rng.randint(-30, 30) for _ in range(d))
        shift = [rng.randint(-5, 5) for _ in range(d)]
        x2 = list(x)
        for k, v in zip(shift, vecs):
            x2 = [e + k * c for e, c in zip(x2, v)]
        assert box_reduce(vecs, x).w == box_reduce(vecs, tuple(x2)).w
        done += 1


def test_box_reduce_idempotent():
    rng = random.Random(16)
    done = 0
    while done < 100:
        d = rng.randint(1, 4)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(d)]
        if det_exact(IntMat(vecs)) == 0:
            continue
        x = tuple(rng.randint(-30, 30) for _ in range(d))
        w = box_reduce(vecs, x).w
        again = box_reduce(vecs, w)
        assert all(c == 0 for c in again.y)
        assert again.w == w
        done += 1


def test_box_product_bound_on_special_bases():
    # for integer points reduced against a triangular reduced basis, the
    # entries of w are bounded by the diagonal: prod(1 + w_i) <= det
    rng = random.Random(17)
    done = 0
    while done < 200:
        d = rng.randint(1, 4)
        vecs = [tuple(rng.randint(-9, 9) for _ in range(d)) for _ in range(d)]
        if det_exact(IntMat(vecs)) == 0:
            continue
        sb = special_basis(vecs)
        x = tuple(rng.randint(-50, 50) for _ in range(d))
        red = box_reduce(sb.vectors, x)
        w = [int(c) for c in red.w]
        assert all(c.denominator == 1 for c in red.w)
        assert all(e >= 0 for e in w)
        prod = 1
        for e in w:
            prod *= 1 + e
        assert prod <= lattice_determinant(sb)
        done += 1


def test_determinant_identity_through_pipeline():
    # det(projected kernel lattice) * gcd(max minors) == |det(basis block)|
    rng = random.Random(18)
    done = 0
    while done < 150:
        m = rng.randint(1, 3)
        n = rng.randint(m + 1, 6)
        a = _random_full_rank(rng, m, n)
        if det_exact(a.select_cols(range(m))) == 0:
            continue
        rep = integer_solution_set(a, (0,) * m)
        proj = project_drop_m(rep.kernel_basis, m)
        sb = special_basis(proj)
        lhs = lattice_determinant(sb) * gcd_max_minors(a)
        rhs = abs(det_exact(a.select_cols(range(m))))
        assert lhs == rhs
        done += 1
