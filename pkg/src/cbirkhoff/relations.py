"""Linear relations satisfied by the permutation matrices of c-singletons.

Matrix entries are addressed 1-based as (row, column).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coxeter import CoxeterElement, inverse_coxeter, nu_table
from .exact import rank

Entry = tuple[int, int]


@dataclass(frozen=True)
class LinearRelation:
    """sum coeffs[(i, j)] * X(i, j) == rhs"""

    coeffs: dict[Entry, Fraction] = field(hash=False)
    rhs: Fraction
    tag: str
    params: tuple = ()

    def evaluate(self, x: Sequence[Sequence]) -> Fraction:
        return sum((v * x[i - 1][j - 1] for (i, j), v in self.coeffs.items()), Fraction(0))

    def holds(self, x: Sequence[Sequence]) -> bool:
        return self.evaluate(x) == self.rhs

    def vector(self, size: int) -> list[Fraction]:
        """Coefficients flattened row-major, followed by the right-hand side."""
        v = [Fraction(0)] * (size * size)
        for (i, j), a in self.coeffs.items():
            v[(i - 1) * size + j - 1] = a
        return v + [self.rhs]


def _relation(entries, tag, params=()) -> LinearRelation:
    return LinearRelation({e: Fraction(1) for e in entries}, Fraction(1), tag, params)


def row_relation(n: int, i: int) -> LinearRelation:
    return _relation([(i, j) for j in range(1, n + 2)], "row", (i,))


def column_relation(n: int, j: int) -> LinearRelation:
    return _relation([(i, j) for i in range(1, n + 2)], "col", (j,))


def row_col_relations(n: int) -> list[LinearRelation]:
    return ([row_relation(n, i) for i in range(1, n + 2)]
            + [column_relation(n, j) for j in range(1, n + 2)])


def zero_entries(c: CoxeterElement) -> set[Entry]:
    """Entries forced to vanish.

    Column u (upper-barred) is zero in rows 1..min(u-1, n+1-u); column d
    (lower-barred) is zero in rows max(d+1, n+3-d)..n+1.
    """
    n = c.n
    out = set()
    for u in c.upper:
        out.update((i, u) for i in range(1, min(u - 1, n + 1 - u) + 1))
    for d in c.lower:
        out.update((i, d) for i in range(max(d + 1, n + 3 - d), n + 2))
    return out


def zero_relations(c: CoxeterElement) -> list[LinearRelation]:
    return [LinearRelation({e: Fraction(1)}, Fraction(0), "zero", e)
            for e in sorted(zero_entries(c))]


def top_sum_range(c: CoxeterElement) -> list[int]:
    """Admissible y for top sums: 2 <= y < (n+2)/2, plus (n+2)/2 when it
    is an integer and lower-barred."""
    n = c.n
    ys = [y for y in range(2, n + 2) if 2 * y < n + 2]
    if n % 2 == 0 and (n + 2) // 2 in c.lower:
        ys.append((n + 2) // 2)
    return ys


def bottom_sum_range(c: CoxeterElement) -> list[int]:
    n = c.n
    ys = [y for y in range(2, n + 2) if 2 * y < n + 2]
    if n % 2 == 0 and (n + 2) // 2 in c.upper:
        ys.append((n + 2) // 2)
    return ys


def _class_columns(labels: dict[int, int], y: int, z: int) -> list[int]:
    return [j for j, v in sorted(labels.items()) if (v - z) % y == 0]


def top_sum_relation(c: CoxeterElement, y: int, z: int) -> LinearRelation:
    """Rows 1..y restricted to columns j with nu_c(j) = z mod y sum to 1."""
    if y not in top_sum_range(c):
        raise ValueError(f"y={y} is outside the admissible top-sum range for n={c.n}")
    cols = _class_columns(nu_table(c), y, z)
    return _relation([(i, j) for i in range(1, y + 1) for j in cols], "top", (y, z % y))


def bottom_sum_relation(c: CoxeterElement, y: int, z: int) -> LinearRelation:
    """Rows n+2-y..n+1 restricted to columns j with nu_{c^-1}(j) = z mod y sum to 1."""
    if y not in bottom_sum_range(c):
        raise ValueError(f"y={y} is outside the admissible bottom-sum range for n={c.n}")
    n = c.n
    cols = _class_columns(nu_table(inverse_coxeter(c)), y, z)
    return _relation([(i, j) for i in range(n + 2 - y, n + 2) for j in cols],
                     "bottom", (y, z % y))


def all_relations(c: CoxeterElement) -> list[LinearRelation]:
    """Rows, columns, zeros, and every admissible top and bottom sum."""
    out = row_col_relations(c.n) + zero_relations(c)
    out += [top_sum_relation(c, y, z) for y in top_sum_range(c) for z in range(y)]
    out += [bottom_sum_relation(c, y, z) for y in bottom_sum_range(c) for z in range(y)]
    return out


def independent_relation_set(c: CoxeterElement) -> list[LinearRelation]:
    """A linearly independent family cutting out the affine hull.

    Rows, columns 2..n+1, all zeros, then top and bottom sums with
    z = nu(x) for x in [2, y]. The y ranges are 2..(n+1)/2 (top) and
    2..(n-1)/2 (bottom) for odd n, and 2..n/2 for both when n is even.
    """
    n = c.n
    out = [row_relation(n, i) for i in range(1, n + 2)]
    out += [column_relation(n, j) for j in range(2, n + 2)]
    out += zero_relations(c)
    if n % 2:
        top_max, bottom_max = (n + 1) // 2, (n - 1) // 2
    else:
        top_max = bottom_max = n // 2
    nu_c, nu_inv = nu_table(c), nu_table(inverse_coxeter(c))
    for y in range(2, top_max + 1):
        out += [top_sum_relation(c, y, nu_c[x]) for x in range(2, y + 1)]
    for y in range(2, bottom_max + 1):
        out += [bottom_sum_relation(c, y, nu_inv[x]) for x in range(2, y + 1)]
    return out


def relation_rank(relations: Sequence[LinearRelation], n: int) -> int:
    """Rank of the homogeneous parts of the relations."""
    return rank([r.vector(n + 1)[:-1] for r in relations])
