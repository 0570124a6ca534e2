"""Exact arithmetic in GF(p) and exact rank computation for dense matrices.

All values are plain Python integers reduced into ``[0, p)``; there is no
floating point anywhere in this package. Matrices are immutable row-major
tuples. Rank is computed by Gaussian elimination over GF(p) on an ``int64``
copy, which stays exact because the characteristic is capped so that a
product of two residues fits comfortably in 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Sequence

import numpy as np

# Cap so (p-1)**2 + (p-1) stays well inside int64 during elimination.
MAX_CHARACTERISTIC = 2**31 - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p). Primality is verified at construction.

    Instances are immutable and safe to share between threads or processes.
    """

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError("characteristic must be an integer")
        if self.p > MAX_CHARACTERISTIC:
            raise ValueError(
                f"characteristic {self.p} exceeds {MAX_CHARACTERISTIC}; "
                "products would not fit in native integers"
            )
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inverse(self, a: int) -> int:
        """Multiplicative inverse of a nonzero residue."""
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in GF({self.p})")
        return pow(a, -1, self.p)


@dataclass(frozen=True)
class MatrixGFp:
    """Dense matrix over GF(p): row-major entries, immutable.

    Entry bounds against the characteristic are enforced where a field is
    available (see :func:`rank`); the constructor checks shape consistency
    and non-negativity only.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        if any(e < 0 for e in self.entries):
            raise ValueError("matrix entries must be non-negative residues")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "MatrixGFp":
        rows = [tuple(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            cols = 0
        flat = tuple(e for r in rows for e in r)
        return cls(len(rows), cols, flat)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]


def rank(matrix: MatrixGFp, field: PrimeField) -> int:
    """Exact rank of ``matrix`` over GF(p) by Gaussian elimination.

    Pivots on the first nonzero entry in column order; no magnitude
    heuristics are needed since the arithmetic is exact. Degenerate shapes
    (zero rows or columns) have rank 0.
    """
    p = field.p
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    a = np.array(matrix.entries, dtype=np.int64).reshape(matrix.rows, matrix.cols)
    if int(a.max()) >= p:
        raise ValueError(f"matrix entry out of range for GF({p})")
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        prow = a[r]
        inv = pow(int(prow[c]), -1, p)
        prow *= inv
        prow %= p
        below = a[r + 1 :]
        if below.size:
            below -= np.outer(below[:, c], prow)
            below %= p
        r += 1
    return r


def _small_binomial(n: int, k: int, p: int) -> int:
    # C(n, k) mod p for 0 <= k <= n < p, via the multiplicative formula.
    k = min(k, n - k)
    num = 1
    den = 1
    for j in range(1, k + 1):
        num = num * ((n - j + 1) % p) % p
        den = den * j % p
    return num * pow(den, -1, p) % p if k else 1


@lru_cache(maxsize=None)
def binomial_mod_p(n: int, k: int, field: PrimeField) -> int:
    """C(n, k) mod p, computed digit by digit via Lucas' theorem.

    Returns 0 when ``k > n``; requires non-negative arguments.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    if k > n:
        return 0
    p = field.p
    out = 1
    while k:
        nd, n = n % p, n // p
        kd, k = k % p, k // p
        if kd > nd:
            return 0
        out = out * _small_binomial(nd, kd, p) % p
    return out
