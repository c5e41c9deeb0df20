from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kodaira.linalg import (
    is_negative_semidefinite,
    matvec,
    quadratic_form,
    rational_kernel,
    rational_rank,
)
from oracles import integer_kernel, negative_semidefinite_by_minors


def symmetric(entries):
    n = len(entries)
    return [[entries[i][j] if j >= i else entries[j][i] for j in range(n)] for i in range(n)]


def test_matvec_rejects_length_mismatch():
    with pytest.raises(ValueError):
        matvec([[1, 0], [0, 1]], [1, 2, 3])


def test_quadratic_form_small():
    assert quadratic_form([[-2, 1], [1, -2]], (1, 1)) == -2
    assert quadratic_form([[0]], (5,)) == 0


def test_kernel_of_singular_cartan_like_matrix():
    # affine A~2: rank 2, kernel spanned by (1,1,1)
    m = [[-2, 1, 1], [1, -2, 1], [1, 1, -2]]
    basis = rational_kernel(m)
    assert len(basis) == 1
    v = basis[0]
    assert [x / v[0] for x in v] == [Fraction(1)] * 3
    assert rational_rank(m) == 2


def test_kernel_of_invertible_matrix_is_empty():
    assert rational_kernel([[-2, 1], [1, -2]]) == []


@st.composite
def small_int_matrices(draw):
    nrows = draw(st.integers(1, 5))
    ncols = draw(st.integers(1, 5))
    return [
        [draw(st.integers(-4, 4)) for _ in range(ncols)] for _ in range(nrows)
    ]


@settings(max_examples=150, deadline=None)
@given(small_int_matrices())
def test_rational_kernel_agrees_with_integer_column_reduction(matrix):
    basis = rational_kernel(matrix)
    oracle = integer_kernel(matrix)
    assert len(basis) == len(oracle)
    ncols = len(matrix[0])
    zero = [0] * len(matrix)
    for vec in oracle:
        assert matvec(matrix, vec) == zero
    for vec in basis:
        assert [sum(Fraction(matrix[i][j]) * vec[j] for j in range(ncols)) for i in range(len(matrix))] == [0] * len(matrix)


def all_small_symmetric_3x3():
    values = (-2, -1, 0, 1)
    for d0 in values:
        for d1 in values:
            for d2 in values:
                for a in values:
                    for b in values:
                        for c in values:
                            yield [[d0, a, b], [a, d1, c], [b, c, d2]]


def test_negative_semidefinite_matches_minor_signs_exhaustively():
    mismatches = [
        m
        for m in all_small_symmetric_3x3()
        if is_negative_semidefinite(m) != negative_semidefinite_by_minors(m)
    ]
    assert mismatches == []


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_negative_semidefinite_matches_minor_signs_random_4x4(rows):
    m = symmetric(rows)
    assert is_negative_semidefinite(m) == negative_semidefinite_by_minors(m)


def test_negative_semidefinite_rejects_asymmetric_input():
    with pytest.raises(ValueError):
        is_negative_semidefinite([[0, 1], [2, 0]])


def test_gram_matrices_are_positive_semidefinite():
    # -A^t A is always negative semidefinite
    a = [[1, 2, 0], [-1, 3, 2]]
    gram = [[sum(a[k][i] * a[k][j] for k in range(2)) for j in range(3)] for i in range(3)]
    assert is_negative_semidefinite([[-x for x in row] for row in gram])
