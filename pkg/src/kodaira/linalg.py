"""Exact linear algebra for small symmetric integer matrices.

Everything here runs in exact arithmetic: integer (fraction-free
elimination) or `fractions.Fraction`. No floating point is used anywhere,
so there are no tolerances to tune. Matrices are plain sequences of
sequences of ints; sizes stay tiny (a few dozen rows), so the dense
algorithms below are more than fast enough. Inner loops skip zero entries
because the matrices of interest are sparse (tree- or cycle-shaped).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def matvec(matrix: IntMatrix, vector: Sequence[int]) -> list[int]:
    """Matrix-vector product in exact integer arithmetic."""
    result = []
    for row in matrix:
        if len(row) != len(vector):
            raise ValueError(
                f"vector length {len(vector)} does not match row length {len(row)}"
            )
        result.append(sum(x * v for x, v in zip(row, vector) if x))
    return result


def quadratic_form(matrix: IntMatrix, vector: Sequence[int]) -> int:
    """v^t M v in exact integer arithmetic."""
    return sum(vi * wi for vi, wi in zip(vector, matvec(matrix, vector)))


def rational_kernel(matrix: IntMatrix) -> list[list[Fraction]]:
    """Basis of the null space of an integer matrix, over the rationals.

    Gauss-Jordan elimination with `Fraction` entries; the basis vectors come
    from the free columns of the reduced row echelon form. Returns an empty
    list for an injective matrix.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0

    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break

    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def rational_rank(matrix: IntMatrix) -> int:
    ncols = len(matrix[0]) if matrix else 0
    return ncols - len(rational_kernel(matrix))


def negative_semidefinite_with_rank(matrix: IntMatrix) -> tuple[bool, int]:
    """Exact semidefiniteness test plus the rank, in one integer pass.

    Runs fraction-free (Bareiss) symmetric Gaussian elimination on the
    negated matrix. After k steps every trailing entry is the corresponding
    Schur-complement entry scaled by a positive integer, so sign tests on
    pivots are valid: a negative pivot means indefinite, and a zero pivot is
    admissible only if its whole row already vanished. The rank is the
    number of nonzero pivots (meaningful only when the test passes).
    """
    n = len(matrix)
    b = [[-matrix[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        if len(matrix[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(n):
            if matrix[i][j] != matrix[j][i]:
                raise ValueError("matrix is not symmetric")

    prev = 1
    rank = 0
    for k in range(n):
        row_k = b[k]
        p = row_k[k]
        if p < 0:
            return False, rank
        if p == 0:
            if any(row_k[k + 1 :]):
                return False, rank
            continue
        rank += 1
        # the update (x*p - bik*y) // prev divides exactly; terms with y = 0
        # reduce to the pure rescale x*p // prev, and zeros stay zero
        support = [j for j in range(k + 1, n) if row_k[j]]
        in_support = [False] * n
        for j in support:
            in_support[j] = True
        rescale = p != prev
        for i in range(k + 1, n):
            row_i = b[i]
            bik = row_i[k]
            if bik:
                for j in support:
                    row_i[j] = (row_i[j] * p - bik * row_k[j]) // prev
                for j in range(k + 1, n):
                    if row_i[j] and not in_support[j]:
                        row_i[j] = row_i[j] * p // prev
            elif rescale:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = row_i[j] * p // prev
        prev = p
    return True, rank


def is_negative_semidefinite(matrix: IntMatrix) -> bool:
    return negative_semidefinite_with_rank(matrix)[0]
