import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macring.corpus import simplex_boundary
from macring.intlinalg import (
    AbelianGroup,
    IntMatrix,
    InconsistentComplex,
    cohomology_at,
    cohomology_group,
    invariant_factors,
    smith_normal_form,
    solve,
)
from macring.simplicial import reduced_cochain_complex

from oracles import brute_solve, dense_mul, det, rank_over_q


def matrices(max_rows=6, max_cols=6, values=st.integers(-6, 6)):
    return st.integers(0, max_rows).flatmap(lambda r: st.integers(0, max_cols).flatmap(
        lambda c: st.lists(st.lists(values, min_size=c, max_size=c), min_size=r, max_size=r).map(
            lambda rows: IntMatrix.from_dense(rows, c))))


def test_snf_examples():
    assert smith_normal_form(IntMatrix.from_dense([[2, 0], [0, 3]])).diag == [1, 6]
    assert smith_normal_form(IntMatrix.zeros(3, 3)).diag == []
    assert smith_normal_form(IntMatrix.identity(4)).diag == [1, 1, 1, 1]
    assert smith_normal_form(IntMatrix.zeros(0, 0)).diag == []


def test_snf_large_entries_no_overflow():
    big = 2 ** 80 + 1
    A = IntMatrix.from_dense([[big, 2 ** 70], [3 * big, 5]])
    s = smith_normal_form(A)
    assert s.U @ A @ s.V == s.diagonal_matrix()
    assert s.diag[0] * s.diag[1] == abs(det(A.to_dense()))


def test_snf_is_deterministic():
    A = IntMatrix.from_dense([[4, 6, 2], [6, 9, 3], [2, 3, 7]])
    a, b = smith_normal_form(A), smith_normal_form(A)
    assert a.diag == b.diag and a.U == b.U and a.V == b.V


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_snf_properties(A):
    s = smith_normal_form(A)
    assert s.U @ A @ s.V == s.diagonal_matrix()
    assert s.U @ s.U_inv == IntMatrix.identity(A.rows)
    assert s.V @ s.V_inv == IntMatrix.identity(A.cols)
    assert abs(det(s.U.to_dense())) == 1 and abs(det(s.V.to_dense())) == 1
    assert all(d > 0 for d in s.diag)
    assert all(b % a == 0 for a, b in zip(s.diag, s.diag[1:]))
    assert s.rank == rank_over_q(A.to_dense())
    assert smith_normal_form(A, transforms=False).diag == s.diag


def test_cohomology_at_examples():
    n = 3
    H = cohomology_at(IntMatrix.zeros(n, 0), IntMatrix.zeros(0, n))
    assert H.group == AbelianGroup(3)
    H = cohomology_at(IntMatrix.from_dense([[2]]), IntMatrix.zeros(0, 1))
    assert H.group == AbelianGroup(0, (2,))
    assert H.coordinates({0: 1}) == [1]
    assert H.coordinates({0: 2}) == [0]


def test_cohomology_of_circle_degree_one():
    deltas = reduced_cochain_complex(simplex_boundary(3))
    d_in = deltas[0]                    # vertices -> edges
    d_out = IntMatrix.zeros(0, 3)       # no triangles
    H = cohomology_at(d_in, d_out)
    # rank-nullity over Q: 3 - 0 - rank(d_in)
    assert 3 - rank_over_q(d_in.to_dense()) == 1
    assert H.group == AbelianGroup(1)


def test_cohomology_at_rejects_non_complex():
    with pytest.raises(InconsistentComplex):
        cohomology_at(IntMatrix.from_dense([[1]]), IntMatrix.from_dense([[1]]))
    with pytest.raises(ValueError):
        cohomology_at(IntMatrix.zeros(2, 1), IntMatrix.zeros(1, 3))


@st.composite
def complexes(draw):
    # d_out @ d_in == 0 by construction: d_in = K @ X with K's columns in ker d_out
    n = draw(st.integers(1, 5))
    rows = draw(st.integers(0, 3))
    d_out = IntMatrix.from_dense(draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                                               min_size=rows, max_size=rows)), n)
    s = smith_normal_form(d_out)
    kernel = s.V.submatrix(cols=range(s.rank, n))
    p = draw(st.integers(0, 4))
    X = IntMatrix.from_dense(draw(st.lists(st.lists(st.integers(-4, 4), min_size=p, max_size=p),
                                           min_size=kernel.cols, max_size=kernel.cols)), p)
    return kernel @ X, d_out


@settings(max_examples=200, deadline=None)
@given(complexes())
def test_cohomology_properties(pair):
    d_in, d_out = pair
    H = cohomology_at(d_in, d_out)
    n = d_in.rows
    free = n - rank_over_q(d_out.to_dense()) - rank_over_q(d_in.to_dense())
    assert H.group.rank == free
    assert H.group == cohomology_group(d_in, d_out)
    for k, rep in enumerate(H.representatives):
        assert H.is_cocycle(rep)
        unit = [0] * len(H.representatives)
        unit[k] = 1
        assert H.coordinates(rep) == unit
    for col in d_in.col_dicts():
        assert H.coordinates(col) == [0] * len(H.representatives)
    for d in H.orders:
        assert d == 0 or d >= 2


def test_solve_examples():
    assert solve(IntMatrix.from_dense([[2]]), [4]) == [2]
    assert solve(IntMatrix.from_dense([[2]]), [3]) is None
    A = IntMatrix.from_dense([[1, 2], [0, 3]])
    x = solve(A, [5, 6])
    assert x == [1, 2] and A @ x == [5, 6]


@settings(max_examples=300, deadline=None)
@given(matrices(3, 3, st.integers(-3, 3)), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_solve_matches_brute_force(A, b):
    b = b[:A.rows]
    x = solve(A, b)
    if x is not None:
        assert A @ x == b
    elif A.cols:
        assert brute_solve(A.to_dense(), b, 8) is None


def test_invariant_factors_and_groups():
    assert invariant_factors([2, 3]) == [6]
    assert invariant_factors([4, 6, 1]) == [2, 12]
    assert AbelianGroup.from_orders([0, 2, 3, 0]) == AbelianGroup(2, (6,))
    assert AbelianGroup(1, (2,)) + AbelianGroup(0, (2,)) == AbelianGroup(1, (2, 2))
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert str(AbelianGroup()) == "0"
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))


def test_matrix_helpers():
    A = IntMatrix.from_dense([[1, 0, 2], [0, 3, 0]])
    B = IntMatrix.from_dense([[1, 1], [0, 2], [4, 0]])
    assert (A @ B).to_dense() == dense_mul(A.to_dense(), B.to_dense())
    assert A.T.to_dense() == [[1, 0], [0, 3], [2, 0]]
    assert A.nnz == 3 and A[0, 2] == 2
    with pytest.raises(IndexError):
        IntMatrix(1, 1, {(1, 0): 1})
