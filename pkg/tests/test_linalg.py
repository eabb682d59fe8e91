from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symmetrizer.linalg import (
    QMatrix,
    Subspace,
    bareiss_echelon,
    image,
    jordan_block_profile,
    kernel,
    matrix_power,
    nilpotency_index,
    nullspace,
    rank,
    rref,
    rref_nullspace,
    trace_gram,
)

small = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


def naive_rref(rows):
    """Textbook Gauss-Jordan over Fraction, kept independent of the library."""
    A = [[Fraction(v) for v in r] for r in rows]
    m, n = len(A), len(A[0])
    r = 0
    pivots = []
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        A[r] = [v / A[r][c] for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_matches_naive_gauss_jordan(rows):
    assert rref(rows) == naive_rref(rows)


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_rank_nullity_and_kernel(rows):
    M = QMatrix(rows)
    r, ns = rref_nullspace(M)
    assert r + ns.dim == M.ncols
    for v in ns.basis:
        assert M.apply(v) == tuple(Fraction(0) for _ in rows)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_bareiss_rows_are_integers_with_same_rank(rows):
    A, piv = bareiss_echelon(rows)
    assert all(isinstance(v, int) for r in A for v in r)
    assert len(piv) == len(naive_rref(rows)[1])


def test_documented_examples():
    r, ns = rref_nullspace(QMatrix.identity(4))
    assert (r, ns.dim) == (4, 0)
    r, ns = rref_nullspace(QMatrix.zeros(3, 5))
    assert (r, ns.dim) == (0, 5)


def test_fractional_entries():
    M = QMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert M.rank() == 1
    assert kernel(M).basis == ((Fraction(1), Fraction(-3, 2)),)


def test_powers_and_nilpotency():
    N3 = QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert matrix_power(N3, 0) == QMatrix.identity(3)
    assert matrix_power(N3, 2).rank() == 1
    assert nilpotency_index(N3) == 3
    assert nilpotency_index(QMatrix.identity(3)) is None
    with pytest.raises(ValueError):
        matrix_power(QMatrix([[1, 2]]), 2)


def test_jordan_profile():
    # blocks of sizes 3 and 1 and 2 in a 6x6 matrix
    J = QMatrix.zeros(6)
    for i, j in [(0, 1), (1, 2), (4, 5)]:
        J = J + QMatrix.unit(6, i, j)
    assert jordan_block_profile(J) == [3, 2, 1]
    with pytest.raises(ValueError):
        jordan_block_profile(QMatrix.identity(2))


def test_subspace_operations():
    U = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    W = Subspace.span([(0, 1, 0), (0, 0, 1), (0, 1, 1)], 3)
    assert W.dim == 2
    assert U.intersect(W) == Subspace.span([(0, 5, 0)], 3)
    assert U.orthogonal_complement() == Subspace.span([(0, 0, 1)], 3)
    assert U.coordinates((2, 3, 0)) == [2, 3]
    assert U.coordinates((0, 0, 1)) is None
    assert U.contains_subspace(Subspace.span([(1, 1, 0)], 3))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=50, deadline=None)
def test_image_kernel_dimensions(rows):
    M = QMatrix(rows)
    assert image(M).dim + kernel(M).dim == len(rows)
    for v in image(M).basis:
        assert Subspace.span([M.col(j) for j in range(len(rows))], len(rows)).contains(v)


def test_trace_gram():
    A, B = QMatrix.identity(2), QMatrix([[0, 1], [0, 0]])
    G = trace_gram([A, B])
    assert G == QMatrix([[2, 0], [0, 0]])


def test_nullspace_canonical():
    a = nullspace([[1, 2, 3]], 3)
    b = nullspace([[2, 4, 6], [1, 2, 3]], 3)
    assert a == b and rank([[1, 2, 3], [2, 4, 6]]) == 1
