"""Order polytopes of finite posets, vertex clouds of permutation
matrices, and a probe comparing the two for arbitrary reduced words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GuardExceeded
from .exact import affine_rank
from .group import Permutation, Word, is_reduced, permutation_matrix, word_to_perm
from .heap import Heap, Poset, count_linear_extensions, order_ideals


@dataclass(frozen=True)
class OrderPolytope:
    poset: Poset
    vertices: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return self.poset.size


def order_polytope(p: Poset) -> OrderPolytope:
    """Vertices are indicator vectors of order ideals.

    Coordinates follow the convention x_i >= x_j whenever i <= j, so an
    ideal (a down-set) is the set where the coordinate is 1.
    """
    verts = tuple(tuple(int(x in i) for x in range(1, p.size + 1)) for i in order_ideals(p))
    return OrderPolytope(p, verts)


def membership(p: Poset, x: Sequence) -> bool:
    """Is x in [0,1]^P with x_i >= x_j for every relation i <= j?"""
    if len(x) != p.size:
        raise ValueError("dimension mismatch")
    vals = [Fraction(v) for v in x]
    if any(v < 0 or v > 1 for v in vals):
        return False
    return all(vals[i - 1] >= vals[j - 1] for i, j in p.covers())


def normalized_volume(p: Poset) -> int:
    """|P|! times the Euclidean volume, which is the number of linear extensions."""
    return count_linear_extensions(p)


@dataclass(frozen=True)
class VertexCloud:
    points: tuple[tuple[int, ...], ...]

    @classmethod
    def of_permutations(cls, perms: Sequence[Permutation]) -> "VertexCloud":
        return cls(tuple(tuple(v for row in permutation_matrix(w) for v in row) for w in perms))


def affine_dimension(cloud: VertexCloud) -> int:
    return affine_rank(cloud.points)


def reduced_words(w: Permutation, guard: int = 100_000) -> list[Word]:
    """All reduced words of w, by BFS under commutation and braid moves."""
    from .group import reduced_word

    start = reduced_word(w).letters
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        moves = []
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if abs(a - b) > 1:
                moves.append(cur[:k] + (b, a) + cur[k + 2:])
            if k + 2 < len(cur) and cur[k + 2] == a and abs(a - b) == 1:
                moves.append(cur[:k] + (b, a, b) + cur[k + 3:])
        for nxt in moves:
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > guard:
                    raise GuardExceeded(f"more than {guard} reduced words")
                queue.append(nxt)
    return [Word(w.n, t) for t in sorted(seen)]


@dataclass(frozen=True)
class CloudProbeReport:
    word: str
    ideals: int
    distinct_perms: int
    heap_dimension: int
    cloud_dimension: int
    volume: int

    @property
    def verdict(self) -> str:
        if self.distinct_perms != self.ideals or self.cloud_dimension != self.heap_dimension:
            return "counterexample"
        return "possible-equivalent"

    def to_json(self) -> dict:
        return {"word": self.word, "ideals": self.ideals, "distinct_perms": self.distinct_perms,
                "heap_dimension": self.heap_dimension,
                "cloud_dimension": self.cloud_dimension, "volume": self.volume,
                "verdict": self.verdict}


def ideal_cloud_probe(u: Word) -> CloudProbeReport:
    """Compare the order polytope of Heap(u) with the convex hull of the
    permutation matrices of the subwords indexed by its order ideals.

    Different vertex counts or different dimensions rule out a unimodular
    equivalence. Passing both tests is necessary, not sufficient.
    """
    if not is_reduced(u):
        raise ValueError(f"{u} is not reduced")
    h = Heap(u)
    ideals = order_ideals(h)
    perms = [word_to_perm(h.subword(i)) for i in ideals]
    distinct = sorted(set(perms), key=lambda p: p.image)
    return CloudProbeReport(str(u), len(ideals), len(distinct), h.size,
                     affine_dimension(VertexCloud.of_permutations(distinct)),
                     count_linear_extensions(h))
