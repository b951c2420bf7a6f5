"""Exact determinants over int / Fraction entries."""

from fractions import Fraction
from itertools import permutations
from typing import Sequence, Union

Number = Union[int, Fraction]


def det(matrix: Sequence[Sequence[Number]]) -> Number:
    """Determinant by Bareiss fraction-free elimination.

    Integer input stays in the integers (every division is exact), so the
    result is an ``int`` for integer matrices and a ``Fraction`` otherwise.
    The 0x0 determinant is 1.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - aik * row_k[j]
                row_i[j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct entries)."""
    inversions = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


def det_leibniz(matrix: Sequence[Sequence[Number]]) -> Number:
    # O(n * n!) reference; only for cross-checking small cases
    n = len(matrix)
    total: Number = 0
    for perm in permutations(range(n)):
        term: Number = permutation_sign(perm)
        for i, j in enumerate(perm):
            term *= matrix[i][j]
            if term == 0:
                break
        total += term
    return total
