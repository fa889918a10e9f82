"""Coordinate projection of (n+1)x(n+1) matrices onto binomial(n+1, 2)
entries, and its inverse on the affine hull of c-singleton matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coxeter import CoxeterElement, c_power, inverse_coxeter, nu_table
from .errors import InconsistentProjection, SingularSystem
from .exact import solve
from .relations import Entry, zero_entries


def projection_indices(c: CoxeterElement) -> list[Entry]:
    """Ordered entries (row, col) kept by the projection."""
    n = c.n
    out: list[Entry] = []
    for d in c.lower:
        out.extend((i, d) for i in range(d - 1, 0, -1))
    out.extend((i, n + 1) for i in range(n, 0, -1))
    for u in reversed(c.upper):
        m = min(u - 1, n + 1 - u)
        out.extend((n + 2 - k, c_power(c, k, u)) for k in range(1, m + 1))
        if 2 * u > n + 2:
            out.extend((i, u) for i in range(u - 1, m, -1))
    out.reverse()
    return out


def project(c: CoxeterElement, x: Sequence[Sequence]) -> list:
    return [x[i - 1][j - 1] for i, j in projection_indices(c)]


def _top_rows(c: CoxeterElement) -> list[int]:
    n = c.n
    rows = [k for k in range(1, n + 2) if 2 * k <= n + 1]
    if n % 2 == 0 and (n + 2) // 2 in c.lower:
        rows.append((n + 2) // 2)
    return rows


def reconstruct(c: CoxeterElement, v: Sequence) -> list[list[Fraction]]:
    """The unique matrix in the affine hull whose projection is ``v``.

    Rows near the top are filled downward from the top sums, rows near the
    bottom upward from column sums and bottom sums. Every step is a square
    linear system that must have a unique solution.
    """
    n = c.n
    size = n + 1
    idx = projection_indices(c)
    if len(v) != len(idx):
        raise ValueError(f"expected {len(idx)} coordinates, got {len(v)}")
    x: list[list[Fraction | None]] = [[None] * size for _ in range(size)]
    for (i, j), val in zip(idx, v):
        x[i - 1][j - 1] = Fraction(val)
    for i, j in zero_entries(c):
        x[i - 1][j - 1] = Fraction(0)

    def fill_row(k: int, classes: list[list[int]], rhs: list[Fraction]):
        unknown = [j for j in range(1, size + 1) if x[k - 1][j - 1] is None]
        a, b = [], []
        for cols, target in zip(classes, rhs):
            known = sum((x[k - 1][j - 1] for j in cols if x[k - 1][j - 1] is not None),
                        Fraction(0))
            a.append([int(j in cols) for j in unknown])
            b.append(target - known)
        try:
            sol = solve(a, b)
        except SingularSystem as exc:
            raise InconsistentProjection(f"row {k}: {exc}") from exc
        for j, val in zip(unknown, sol):
            x[k - 1][j - 1] = val

    def column_known(j: int, skip: int) -> Fraction:
        vals = [x[i][j - 1] for i in range(size) if i != skip - 1]
        if any(t is None for t in vals):
            raise InconsistentProjection(f"column {j} is not determined")
        return sum(vals, Fraction(0))

    top = _top_rows(c)
    nu_c = nu_table(c)
    for k in top:
        classes = [[j for j in range(1, size + 1) if (nu_c[j] - z) % k == 0]
                   for z in range(k)]
        rhs = [1 - sum((x[i - 1][j - 1] for i in range(1, k) for j in cols), Fraction(0))
               for cols in classes]
        fill_row(k, classes, rhs)

    nu_inv = nu_table(inverse_coxeter(c))
    for k in range(size, 0, -1):
        if k in top:
            break
        if x[k - 1][k - 1] is None:
            x[k - 1][k - 1] = 1 - column_known(k, k)
        y = n + 2 - k
        classes = [[j for j in range(1, size + 1) if (nu_inv[j] - z) % y == 0]
                   for z in range(y)]
        rhs = [1 - sum((x[i - 1][j - 1] for i in range(k + 1, size + 1) for j in cols),
                       Fraction(0))
               for cols in classes]
        fill_row(k, classes, rhs)

    done: list[list[Fraction]] = [list(row) for row in x]  # type: ignore[arg-type]
    for t in range(size):
        if sum(done[t]) != 1 or sum(row[t] for row in done) != 1:
            raise InconsistentProjection(f"row or column {t + 1} does not sum to 1")
    return done
