"""Exact integer linear algebra: Hermite form, saturated kernels, rank.

Matrices are plain lists of rows of Python ints (or Fractions for
:func:`rank`).  Everything is fraction free where it matters.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Sequence

__all__ = ["hermite_normal_form", "integer_kernel", "clear_denominators", "rank"]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a x + b y = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _row_echelon(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Unimodular row reduction to Hermite normal form (zero rows kept last)."""
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        for r in range(pivot_row + 1, len(rows)):
            b = rows[r][col]
            if b == 0:
                continue
            a = rows[pivot_row][col]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            top, bot = rows[pivot_row], rows[r]
            # [[x, y], [-q, p]] has determinant 1
            rows[pivot_row] = [x * u + y * v for u, v in zip(top, bot)]
            rows[r] = [-q * u + p * v for u, v in zip(top, bot)]
        a = rows[pivot_row][col]
        if a == 0:
            continue
        if a < 0:
            rows[pivot_row] = [-u for u in rows[pivot_row]]
            a = -a
        for r in range(pivot_row):
            f = rows[r][col] // a
            if f:
                rows[r] = [u - f * v for u, v in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return rows


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form; only the nonzero rows are returned.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``,
    so the result is a canonical basis of the row lattice.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    reduced = _row_echelon([[int(x) for x in r] for r in rows], ncols)
    return [r for r in reduced if any(r)]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of the full lattice ``{v in Z^n : A v = 0}``.

    The kernel is read off a unimodular transform of ``A^T`` (so it is
    saturated, never a finite-index sublattice) and returned in Hermite
    normal form.
    """
    m = len(rows)
    aug = []
    for j in range(ncols):
        col = [int(rows[i][j]) for i in range(m)]
        aug.append(col + [1 if k == j else 0 for k in range(ncols)])
    reduced = _row_echelon(aug, m)
    kernel = [r[m:] for r in reduced if not any(r[:m])]
    return hermite_normal_form(kernel)


def clear_denominators(vec: Sequence) -> list[int]:
    """Smallest positive multiple of a rational vector that is integral."""
    fr = [Fraction(x) for x in vec]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    return [int(x * den) for x in fr]


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [clear_denominators(r) for r in matrix if len(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = a[r][col]
        r += 1
        if r == nrows:
            break
    return r
