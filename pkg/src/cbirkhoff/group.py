"""Permutations of [n+1], words in the simple transpositions, and
permutation matrices.

Permutations are stored in one-line notation with values 1..n+1. The
simple transposition ``s_i`` acts on the right by swapping *positions*
``i`` and ``i+1``, so a word is evaluated left to right starting from the
identity.

>>> str(word_to_perm(Word.parse("132", 3)))
'2413'
>>> str(word_to_perm(Word.parse("121", 2)))
'321'
>>> coxeter_length(Permutation.parse("4321"))
6
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

Matrix = tuple[tuple[int, ...], ...]


def _format_seq(items: Sequence[int]) -> str:
    if all(0 <= x <= 9 for x in items):
        return "".join(map(str, items))
    return ",".join(map(str, items))


def parse_int_seq(text: str) -> tuple[int, ...]:
    """Parse ``"2413"`` or ``"1,4,3,10"`` into a tuple of ints."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    if not text.isdigit():
        raise ValueError(f"not a digit string: {text!r}")
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n+1] in one-line notation."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 2)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n + 1, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(parse_int_seq(text))

    @property
    def n(self) -> int:
        return len(self.image) - 1

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # composition as functions: (u * v)(i) = u(v(i))
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.image[j - 1] for j in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for pos, val in enumerate(self.image, 1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def __len__(self) -> int:
        return len(self.image)

    def __str__(self) -> str:
        return _format_seq(self.image)


@dataclass(frozen=True)
class Word:
    """A word in the letters 1..n, i.e. in the simple transpositions of A_n."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank n must be positive")
        bad = [a for a in self.letters if not 1 <= a <= self.n]
        if bad:
            raise ValueError(f"letters {bad} outside [1, {self.n}]")

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        return cls(n, parse_int_seq(text))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return Word(self.n, self.letters + other.letters)

    def reversed(self) -> "Word":
        return Word(self.n, self.letters[::-1])

    def __str__(self) -> str:
        return _format_seq(self.letters)


def simple_transposition(n: int, i: int) -> Permutation:
    return word_to_perm(Word(n, (i,)))


def word_to_perm(word: Word) -> Permutation:
    img = list(range(1, word.n + 2))
    for i in word.letters:
        img[i - 1], img[i] = img[i], img[i - 1]
    return Permutation(tuple(img))


def coxeter_length(w: Permutation) -> int:
    """Number of inversions."""
    img = w.image
    return sum(1 for i, j in combinations(range(len(img)), 2) if img[i] > img[j])


def is_reduced(word: Word) -> bool:
    return coxeter_length(word_to_perm(word)) == len(word)


def is_left_descent(w: Permutation, q: int) -> bool:
    """True when ``s_q w`` is shorter than ``w``: value q+1 sits left of q."""
    inv = w.inverse()
    return inv(q + 1) < inv(q)


def left_multiply(q: int, w: Permutation) -> Permutation:
    """``s_q w``: swap the values q and q+1."""
    swap = {q: q + 1, q + 1: q}
    return Permutation(tuple(swap.get(x, x) for x in w.image))


def reduced_word(w: Permutation) -> Word:
    """Some reduced word for ``w`` (the one found by bubble sort)."""
    img = list(w.image)
    letters: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(img) - 1):
            if img[i] > img[i + 1]:
                img[i], img[i + 1] = img[i + 1], img[i]
                letters.append(i + 1)
                changed = True
    return Word(w.n, tuple(reversed(letters)))


def permutation_matrix(w: Permutation) -> Matrix:
    """0/1 matrix with a 1 in row i, column w(i)."""
    size = len(w)
    return tuple(tuple(int(w(i) == j) for j in range(1, size + 1))
                 for i in range(1, size + 1))


def reverse_perm(w: Permutation) -> Permutation:
    """The one-line notation read backwards, i.e. ``w * w0``."""
    return Permutation(w.image[::-1])


def support(word: Word) -> frozenset[int]:
    """Set of letters in a reduced word (an invariant of the permutation)."""
    if not is_reduced(word):
        raise ValueError(f"word {word} is not reduced")
    return frozenset(word.letters)


def all_permutations(n: int) -> Iterator[Permutation]:
    for img in permutations(range(1, n + 2)):
        yield Permutation(img)


def has_barred_pattern(w: Permutation, pattern: str, barred: Iterable[int]) -> bool:
    """Look for an occurrence of a three-letter pattern whose ``2`` lies in ``barred``.

    ``pattern`` is one of ``"312"``, ``"231"``, ``"132"``, ``"213"`` and the
    value playing the role of ``2`` must belong to ``barred``.

    >>> has_barred_pattern(Permutation.parse("312"), "312", {2})
    True
    >>> has_barred_pattern(Permutation.parse("312"), "312", {3})
    False
    """
    marks = set(barred)
    rel = [int(ch) for ch in pattern]
    img = w.image
    for i, j, k in combinations(range(len(img)), 3):
        vals = (img[i], img[j], img[k])
        if vals[rel.index(2)] not in marks:
            continue
        order = sorted(range(3), key=lambda t: vals[t])
        if [order.index(t) + 1 for t in range(3)] == rel:
            return True
    return False
