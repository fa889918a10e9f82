"""Exact linear algebra over the integers and rationals.

Nothing here ever touches floating point. Rank uses fraction-free
(Bareiss) elimination on integer rows; solving and inversion use
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import SingularSystem

Number = int | Fraction
Matrix = list[list[Number]]


def _integer_rows(rows: Sequence[Sequence[Number]]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * scale) for x in fr])
    return out


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank over Q of the matrix whose rows are ``rows``.

    >>> rank([[1, 2], [2, 4]])
    1
    >>> rank([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
    3
    """
    m = _integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        pr = m[r]
        for i in range(r + 1, len(m)):
            row = m[i]
            a = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - a * pr[j]) // prev
            row[col] = 0
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def solve(a: Sequence[Sequence[Number]], b: Sequence[Number]) -> list[Fraction]:
    """Solve ``a x = b`` exactly, allowing redundant equations.

    Raises :class:`SingularSystem` unless the solution exists and is unique.

    >>> solve([[1, 1], [1, -1], [2, 0]], [3, 1, 4])
    [Fraction(2, 1), Fraction(1, 1)]
    """
    if len(a) != len(b):
        raise ValueError("row count of a and length of b differ")
    width = len(a[0]) if a else 0
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            raise SingularSystem("solution is not unique")
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    if any(row[width] != 0 for row in m[r:]):
        raise SingularSystem("system is inconsistent")
    return [m[i][width] for i in range(width)]


def inverse(a: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix."""
    size = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
         for i, row in enumerate(a)]
    for col in range(size):
        piv = next((i for i in range(col, size) if m[i][col] != 0), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(size):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [row[size:] for row in m]


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def matvec(a: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Number]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for no points)."""
    if not points:
        return -1
    base = points[0]
    return rank([[x - y for x, y in zip(p, base)] for p in points[1:]])
