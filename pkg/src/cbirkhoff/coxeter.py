"""Coxeter elements of A_n and the combinatorial data attached to them.

A Coxeter element is given by a word using each letter 1..n once. Up to
commutation it is determined by which letters are *lower-barred* (i sits
to the right of i-1 in the word) and which are *upper-barred*.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .group import Permutation, Word, word_to_perm


@dataclass(frozen=True, eq=False)
class CoxeterElement:
    word: Word
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def r(self) -> int:
        return len(self.lower)

    @property
    def s(self) -> int:
        return len(self.upper)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.lower)

    def __eq__(self, other):
        return isinstance(other, CoxeterElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self) -> str:
        return str(self.word)

    @cached_property
    def perm(self) -> Permutation:
        return word_to_perm(self.word)

    @cached_property
    def upsilon_upper(self) -> int:
        """Upper-barred letters in [2, (n+1)/2]."""
        return sum(1 for u in self.upper if 2 * u <= self.n + 1)

    @cached_property
    def upsilon_lower(self) -> int:
        """Lower-barred letters in [2, (n+1)/2]."""
        return sum(1 for d in self.lower if 2 * d <= self.n + 1)

    def is_lower(self, i: int) -> bool:
        return i in self.lower

    def is_upper(self, i: int) -> bool:
        return i in self.upper

    def cycle(self) -> tuple[int, ...]:
        """The single cycle (1 d_1 ... d_r n+1 u_s ... u_1)."""
        return (1, *self.lower, self.n + 1, *reversed(self.upper))


def make_coxeter(word: Word) -> CoxeterElement:
    n = word.n
    if sorted(word.letters) != list(range(1, n + 1)):
        raise ValueError(f"{word} does not use each of 1..{n} exactly once")
    pos = {a: k for k, a in enumerate(word.letters)}
    lower = tuple(i for i in range(2, n + 1) if pos[i] > pos[i - 1])
    upper = tuple(i for i in range(2, n + 1) if pos[i] < pos[i - 1])
    return CoxeterElement(word, lower, upper)


def parse_coxeter(text: str, n: int) -> CoxeterElement:
    return make_coxeter(Word.parse(text, n))


def coxeter_from_partition(n: int, lower) -> CoxeterElement:
    """A representative word with the given lower-barred set."""
    lower = set(lower)
    if not lower <= set(range(2, n + 1)):
        raise ValueError("lower-barred letters must lie in [2, n]")
    letters = [1]
    for i in range(2, n + 1):
        if i in lower:
            letters.append(i)
        else:
            letters.insert(0, i)
    return make_coxeter(Word(n, tuple(letters)))


def all_coxeter_elements(n: int) -> list[CoxeterElement]:
    """All 2^(n-1) Coxeter elements of A_n, one word per class."""
    mids = range(2, n + 1)
    out = []
    for k in range(len(mids) + 1):
        for lower in combinations(mids, k):
            out.append(coxeter_from_partition(n, lower))
    return out


def tamari(n: int) -> CoxeterElement:
    return make_coxeter(Word(n, tuple(range(1, n + 1))))


def bipartite(n: int) -> CoxeterElement:
    """Odd letters first, then even letters."""
    odds = tuple(range(1, n + 1, 2))
    evens = tuple(range(2, n + 1, 2))
    return make_coxeter(Word(n, odds + evens))


def inverse_coxeter(c: CoxeterElement) -> CoxeterElement:
    return make_coxeter(c.word.reversed())


def c_power(c: CoxeterElement, k: int, x: int) -> int:
    """Apply c to x, k times (k may be negative)."""
    cyc = c.cycle()
    idx = cyc.index(x)
    return cyc[(idx + k) % len(cyc)]


def nu_table(c: CoxeterElement) -> dict[int, int]:
    """The labelling nu_c of [n+1] by integers."""
    n, ups = c.n, c.upsilon_upper
    table = {1: 0, n + 1: c.r + 1}
    for i, d in enumerate(c.lower, 1):
        table[d] = i
    for j, u in enumerate(c.upper, 1):
        table[u] = -j if j <= ups else n + 1 - j
    return table


def nu(c: CoxeterElement, i: int) -> int:
    if not 1 <= i <= c.n + 1:
        raise ValueError(f"{i} outside [1, {c.n + 1}]")
    return nu_table(c)[i]


def sigma(c: CoxeterElement) -> Permutation:
    """(n+1) d_r ... d_1 1 u_1 ... u_s in one-line notation."""
    return Permutation((c.n + 1, *reversed(c.lower), 1, *c.upper))
