"""Exact rank and null vectors over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

Matrix = Sequence[Sequence[Fraction]]


def _integer_rows(rows: Matrix) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(rows: Matrix) -> int:
    """Rank via fraction-free (Bareiss) elimination; every division is exact."""
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            factor = m[i][col]
            m[i] = [(p * m[i][j] - factor * m[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def null_vector(rows: Matrix, ncols: int) -> Optional[list[Fraction]]:
    """A nonzero x with rows @ x = 0, or None when the columns are independent."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                k = m[i][col]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    x = [Fraction(0)] * ncols
    x[free[0]] = Fraction(1)
    for i, col in enumerate(pivots):
        x[col] = -m[i][free[0]]
    return x
