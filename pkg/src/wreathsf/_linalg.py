"""Dense exact linear algebra over Fraction, for the small matrices used here."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), Fraction(0)) for col in cols])
    return out


def inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError on a singular matrix."""
    n = len(a)
    work = [[Fraction(x) for x in row] + e for row, e in zip(a, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        if pv != 1:
            work[col] = [x / pv for x in work[col]]
        prow = work[col]
        for r in range(n):
            f = work[r][col]
            if r != col and f:
                work[r] = [x - f * y for x, y in zip(work[r], prow)]
    return [row[n:] for row in work]


def determinant(a: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(a)
    work = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        pv = work[col][col]
        det *= pv
        for r in range(col + 1, n):
            f = work[r][col] / pv
            if f:
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return det
