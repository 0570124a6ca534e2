"""Shared helpers: small independent oracles the tests check the library against."""

from __future__ import annotations

import math
from itertools import combinations, permutations

from lefschetz import MatrixGFp

SMALL_PRIMES = (2, 3, 5, 7)


def _permutation_sign(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def det_mod(rows, p: int) -> int:
    """Determinant mod p by permutation expansion (tiny matrices only)."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        prod = _permutation_sign(perm)
        for i, j in enumerate(perm):
            prod = prod * rows[i][j]
        total += prod
    return total % p


def rank_by_minors(matrix: MatrixGFp, p: int) -> int:
    """Rank as the largest size of a nonsingular square submatrix."""
    rows = [matrix.row(i) for i in range(matrix.rows)]
    for k in range(min(matrix.rows, matrix.cols), 0, -1):
        for rsel in combinations(range(matrix.rows), k):
            for csel in combinations(range(matrix.cols), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if det_mod(sub, p) != 0:
                    return k
    return 0


def transpose(matrix: MatrixGFp) -> MatrixGFp:
    rows = [matrix.row(i) for i in range(matrix.rows)]
    flipped = [tuple(r[j] for r in rows) for j in range(matrix.cols)]
    return MatrixGFp.from_rows(flipped, cols=matrix.rows)


def matmul_mod(a: MatrixGFp, b: MatrixGFp, p: int) -> MatrixGFp:
    assert a.cols == b.rows
    arows = [a.row(i) for i in range(a.rows)]
    brows = [b.row(i) for i in range(b.rows)]
    out = []
    for i in range(a.rows):
        out.append(
            tuple(
                sum(arows[i][k] * brows[k][j] for k in range(a.cols)) % p
                for j in range(b.cols)
            )
        )
    return MatrixGFp.from_rows(out, cols=b.cols)


def count_monomials(exponents, degree: int) -> int:
    """Brute-force Hilbert function: count exponent tuples directly."""

    def count(pos: int, remaining: int) -> int:
        if pos == len(exponents):
            return 1 if remaining == 0 else 0
        return sum(
            count(pos + 1, remaining - e)
            for e in range(min(remaining, exponents[pos] - 1) + 1)
        )

    return count(0, degree)


def power_times_monomial_is_zero(p: int, d1: int, d2: int, e1: int, e2: int, power: int) -> bool:
    """Whether (x+y)^power * x^e1 y^e2 vanishes in K[x,y]/(x^d1, y^d2).

    Independent of the library: integer binomials reduced mod p.
    """
    for j in range(power + 1):
        if math.comb(power, j) % p and e1 + j < d1 and e2 + power - j < d2:
            return False
    return True
