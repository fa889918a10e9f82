"""Sorting words, sortable elements and singletons for a Coxeter element,
together with the diagonal reading word and its grid picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coxeter import CoxeterElement
from .errors import GuardExceeded
from .group import (Permutation, Word, all_permutations, has_barred_pattern,
                    is_left_descent, left_multiply, word_to_perm)
from .heap import DEFAULT_IDEAL_GUARD, Heap, OrderIdeal, commutation_class, order_ideals

DEFAULT_RANK_GUARD = 8


def _check_rank(c: CoxeterElement, w: Permutation):
    if w.n != c.n:
        raise ValueError(f"permutation of rank {w.n} used with c of rank {c.n}")


def c_sorting_passes(c: CoxeterElement, w: Permutation) -> list[list[int]]:
    """The c-sorting word of ``w`` split into its passes through c.

    Each pass scans the letters of c in order and takes any letter that is
    a left descent of what remains.
    """
    _check_rank(c, w)
    rest = w
    passes: list[list[int]] = []
    ident = Permutation.identity(c.n)
    while rest != ident:
        block = []
        for q in c.word.letters:
            if is_left_descent(rest, q):
                block.append(q)
                rest = left_multiply(q, rest)
        passes.append(block)
    return passes


def c_sorting_word(c: CoxeterElement, w: Permutation) -> Word:
    """
    >>> from .coxeter import tamari
    >>> str(c_sorting_word(tamari(4), Permutation.parse("42351")))
    '123421'
    """
    return Word(c.n, tuple(a for block in c_sorting_passes(c, w) for a in block))


def is_c_sortable(c: CoxeterElement, w: Permutation) -> bool:
    """Passes of the c-sorting word are nested as sets."""
    blocks = [set(b) for b in c_sorting_passes(c, w)]
    return all(b2 <= b1 for b1, b2 in zip(blocks, blocks[1:]))


def is_c_sortable_by_patterns(c: CoxeterElement, w: Permutation) -> bool:
    _check_rank(c, w)
    return not (has_barred_pattern(w, "312", c.lower)
                or has_barred_pattern(w, "231", c.upper))


def is_c_singleton(c: CoxeterElement, w: Permutation) -> bool:
    """Positional test for membership in the c-Birkhoff set.

    A lower-barred d needs all of [1, d-1] or all of [d+1, n+1] to its
    right; an upper-barred u needs one of those ranges entirely to its left.
    """
    _check_rank(c, w)
    pos = w.inverse()
    top = c.n + 1
    for d in c.lower:
        p = pos(d)
        if not (all(pos(v) > p for v in range(1, d))
                or all(pos(v) > p for v in range(d + 1, top + 1))):
            return False
    for u in c.upper:
        p = pos(u)
        if not (all(pos(v) < p for v in range(1, u))
                or all(pos(v) < p for v in range(u + 1, top + 1))):
            return False
    return True


def is_c_singleton_by_patterns(c: CoxeterElement, w: Permutation) -> bool:
    return (is_c_sortable_by_patterns(c, w)
            and not has_barred_pattern(w, "132", c.lower)
            and not has_barred_pattern(w, "213", c.upper))


@lru_cache(maxsize=None)
def _prefix_images(c: CoxeterElement, guard: int) -> frozenset[Permutation]:
    top = c_sorting_word(c, Permutation.longest(c.n))
    out = set()
    for word in commutation_class(top, guard):
        img = list(range(1, c.n + 2))
        out.add(Permutation(tuple(img)))
        for i in word.letters:
            img[i - 1], img[i] = img[i], img[i - 1]
            out.add(Permutation(tuple(img)))
    return frozenset(out)


def is_c_singleton_oracle(c: CoxeterElement, w: Permutation, guard: int = 200_000) -> bool:
    """Brute force: is ``w`` a prefix of some word commutation-equivalent
    to the c-sorting word of w0?"""
    _check_rank(c, w)
    return w in _prefix_images(c, guard)


def longest_heap(c: CoxeterElement) -> Heap:
    """Heap of the c-sorting word of the longest element."""
    return Heap(c_sorting_word(c, Permutation.longest(c.n)))


def diagonal_reading_word(c: CoxeterElement) -> Word:
    """Decreasing runs: one per lower-barred letter, one of length n, then
    one per upper-barred letter taken from u_s down to u_1."""
    n = c.n
    letters: list[int] = []
    for d in c.lower:
        letters.extend(range(d - 1, 0, -1))
    letters.extend(range(n, 0, -1))
    for u in reversed(c.upper):
        letters.extend(range(n, n - u + 1, -1))
    return Word(n, tuple(letters))


def grid_points(c: CoxeterElement) -> list[tuple[int, int]]:
    """Lattice points of the heap picture; the label of (a, b) is a."""
    n, r, s = c.n, c.r, c.s
    pts = [(a, n + 1 - a) for a in range(n, 0, -1)]
    for i, d in enumerate(c.lower, 1):
        pts.extend((a, n - r + i - a) for a in range(1, d))
    for i, u in enumerate(c.upper, 1):
        pts.extend((n - k, 2 + s - i + k) for k in range(u - 1))
    # diagonals of constant a+b from left to right, each from its
    # south-east end upward
    pts.sort(key=lambda p: (p[0] + p[1], -p[0]))
    return pts


def heap_grid(c: CoxeterElement) -> Heap:
    """The heap read off the grid picture, carrying its coordinates."""
    pts = grid_points(c)
    return Heap(Word(c.n, tuple(a for a, _ in pts)), coords=pts)


@dataclass(frozen=True)
class Singleton:
    perm: Permutation
    ideal: OrderIdeal


def singletons(c: CoxeterElement, heap: Heap | None = None,
               guard: int = DEFAULT_IDEAL_GUARD,
               rank_guard: int = DEFAULT_RANK_GUARD) -> list[Singleton]:
    """One singleton per order ideal of the heap, in bitset order of the ideal.

    ``heap`` defaults to the heap of the c-sorting word of w0; any heap in
    the same commutation class gives the same permutations.
    """
    if c.n > rank_guard:
        raise GuardExceeded(f"n={c.n} exceeds rank guard {rank_guard}")
    h = heap if heap is not None else longest_heap(c)
    return [Singleton(word_to_perm(h.subword(i)), i) for i in order_ideals(h, guard)]


def singleton_ideal(c: CoxeterElement, w: Permutation, heap: Heap | None = None) -> OrderIdeal:
    """The order ideal whose subword represents the singleton ``w``.

    Raises ``ValueError`` if ``w`` is not a c-singleton.
    """
    if not is_c_singleton(c, w):
        raise ValueError(f"{w} is not a c-singleton")
    h = heap if heap is not None else longest_heap(c)
    counts: dict[int, int] = {}
    for a in c_sorting_word(c, w).letters:
        counts[a] = counts.get(a, 0) + 1
    return h.ideal_from_counts(counts)


def a_sequence(c: CoxeterElement, w: Permutation) -> list[int]:
    """Alternating maxima of f(w) and of its complement, numbering the
    heap elements in diagonal-reading order.

    Requires element 1 to belong to f(w).
    """
    members = set(singleton_ideal(c, w, heap_grid(c)).members())
    return a_sequence_of_set(members)


def a_sequence_of_set(members: set[int]) -> list[int]:
    """
    >>> a_sequence_of_set({1, 6, 7, 12, 13, 14, 20, 21, 27})
    [27, 26, 21, 19, 14, 11, 7, 5, 1]
    """
    if 1 not in members:
        raise ValueError("the a-sequence needs 1 in f(w)")
    seq = [max(members)]
    while not set(range(1, seq[-1] + 1)) <= members:
        gap = max(x for x in range(1, seq[-1]) if x not in members)
        back = max(x for x in range(1, gap) if x in members)
        seq += [gap, back]
    return seq


def singleton_count_by_patterns(c: CoxeterElement) -> int:
    return sum(1 for w in all_permutations(c.n) if is_c_singleton(c, w))
