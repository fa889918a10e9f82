"""Finite posets stored as bitsets, and heaps of words.

Elements are numbered 1..size externally and 0..size-1 internally; bit
``k`` of ``down[y]`` is set when element k+1 lies strictly below y+1.
Order ideals are plain ints used as bitsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded
from .group import Word

DEFAULT_IDEAL_GUARD = 500_000
DEFAULT_EXTENSION_GUARD = 16


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite poset given by the strict down-set of every element."""

    def __init__(self, down: Sequence[int]):
        self.down = tuple(down)
        self.size = len(self.down)
        full = (1 << self.size) - 1
        for y, d in enumerate(self.down):
            if d & ~full or d >> y & 1:
                raise ValueError("down-sets must be strict and in range")
            for x in _bits(d):
                if self.down[x] & ~d:
                    raise ValueError("relation is not transitive")

    @classmethod
    def from_relations(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of ``x < y`` for the given 1-based pairs."""
        down = [0] * size
        for x, y in pairs:
            down[y - 1] |= 1 << (x - 1)
        changed = True
        while changed:
            changed = False
            for y in range(size):
                new = down[y]
                for x in _bits(down[y]):
                    new |= down[x]
                if new != down[y]:
                    if new >> y & 1:
                        raise ValueError("relations contain a cycle")
                    down[y], changed = new, True
        return cls(down)

    def leq(self, x: int, y: int) -> bool:
        return x == y or bool(self.down[y - 1] >> (x - 1) & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (x, y), x covered by y, 1-based."""
        out = []
        for y, d in enumerate(self.down):
            shadow = 0
            for x in _bits(d):
                shadow |= self.down[x]
            out.extend((x + 1, y + 1) for x in _bits(d & ~shadow))
        return sorted(out)

    def is_ideal(self, mask: int) -> bool:
        return all(self.down[x] & ~mask == 0 for x in _bits(mask))


@dataclass(frozen=True)
class OrderIdeal:
    heap: "Poset" = field(compare=False, repr=False)
    mask: int

    def members(self) -> list[int]:
        return [x + 1 for x in _bits(self.mask)]

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> (x - 1) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")


class Heap(Poset):
    """The heap of a word: x < y when x comes first and the letters are
    equal or adjacent, closed transitively."""

    def __init__(self, word: Word, coords: Sequence[tuple[int, int]] | None = None):
        down = [0] * len(word)
        for y, a in enumerate(word.letters):
            d = 0
            for x in range(y):
                if abs(word.letters[x] - a) <= 1:
                    d |= down[x] | (1 << x)
            down[y] = d
        super().__init__(down)
        self.word = word
        self.labels = word.letters
        self.n = word.n
        self.coords = tuple(coords) if coords is not None else None

    def label(self, x: int) -> int:
        return self.labels[x - 1]

    def subword(self, ideal: OrderIdeal | int) -> Word:
        """Letters of the ideal in the heap's element order."""
        mask = ideal.mask if isinstance(ideal, OrderIdeal) else ideal
        return Word(self.n, tuple(self.labels[x] for x in _bits(mask)))

    def ideal_from_counts(self, counts: dict[int, int]) -> OrderIdeal:
        """The ideal holding the first ``counts[a]`` elements labelled a.

        Elements sharing a label form a chain, so an ideal is determined
        by how many of each label it contains.
        """
        seen: dict[int, int] = {}
        mask = 0
        for x, a in enumerate(self.labels):
            seen[a] = seen.get(a, 0) + 1
            if seen[a] <= counts.get(a, 0):
                mask |= 1 << x
        for a, k in counts.items():
            if k > seen.get(a, 0):
                raise ValueError(f"heap has fewer than {k} elements labelled {a}")
        if not self.is_ideal(mask):
            raise ValueError("label counts do not describe an order ideal")
        return OrderIdeal(self, mask)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "length": self.size,
            "labels": list(self.labels),
            "covers": [list(p) for p in self.covers()],
            "coords": [list(p) for p in self.coords] if self.coords else None,
        }


def heap_of_word(word: Word) -> Heap:
    return Heap(word)


def heap_correspondence(h1: Heap, h2: Heap) -> dict[int, int] | None:
    """The label-preserving isomorphism h1 -> h2, or None if there is none.

    Such a map must send the k-th element labelled a to the k-th element
    labelled a in the other heap, so at most one candidate exists.
    """
    if h1.n != h2.n or sorted(h1.labels) != sorted(h2.labels):
        return None

    def occurrences(h: Heap) -> dict[tuple[int, int], int]:
        seen: dict[int, int] = {}
        out = {}
        for x, a in enumerate(h.labels, 1):
            seen[a] = seen.get(a, 0) + 1
            out[(a, seen[a])] = x
        return out

    o1, o2 = occurrences(h1), occurrences(h2)
    phi = {o1[k]: o2[k] for k in o1}
    for x in range(1, h1.size + 1):
        for y in range(1, h1.size + 1):
            if h1.leq(x, y) != h2.leq(phi[x], phi[y]):
                return None
    return phi


def order_ideals(p: Poset, guard: int = DEFAULT_IDEAL_GUARD) -> list[OrderIdeal]:
    """All order ideals, sorted by bitset value (so the empty ideal is first)."""
    seen = {0}
    queue = deque([0])
    while queue:
        mask = queue.popleft()
        for x in range(p.size):
            if not mask >> x & 1 and p.down[x] & ~mask == 0:
                nxt = mask | (1 << x)
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > guard:
                        raise GuardExceeded(f"more than {guard} order ideals")
                    queue.append(nxt)
    return [OrderIdeal(p, m) for m in sorted(seen)]


def count_linear_extensions(p: Poset, guard: int = DEFAULT_IDEAL_GUARD) -> int:
    """e(P), by dynamic programming over the lattice of order ideals."""
    masks = sorted((i.mask for i in order_ideals(p, guard)), key=lambda m: bin(m).count("1"))
    ways = {0: 1}
    for mask in masks[1:]:
        total = 0
        for x in _bits(mask):
            prev = mask ^ (1 << x)
            # x must be maximal in mask
            if prev in ways and not any(p.down[y] >> x & 1 for y in _bits(prev)):
                total += ways[prev]
        ways[mask] = total
    return ways[(1 << p.size) - 1]


def linear_extensions(p: Poset, guard: int = DEFAULT_EXTENSION_GUARD) -> Iterator[tuple[int, ...]]:
    """Every linear extension as a tuple of 1-based elements."""
    if p.size > guard:
        raise GuardExceeded(f"poset has {p.size} elements, guard is {guard}")

    def extend(mask: int, acc: list[int]):
        if len(acc) == p.size:
            yield tuple(acc)
            return
        for x in range(p.size):
            if not mask >> x & 1 and p.down[x] & ~mask == 0:
                acc.append(x + 1)
                yield from extend(mask | (1 << x), acc)
                acc.pop()

    yield from extend(0, [])


def labeled_linear_extensions(h: Heap, guard: int = DEFAULT_EXTENSION_GUARD) -> set[Word]:
    """The commutation class of the heap's word, via its linear extensions."""
    return {Word(h.n, tuple(h.label(x) for x in ext)) for ext in linear_extensions(h, guard)}


def commutation_class(word: Word, guard: int = 200_000) -> set[Word]:
    """Words reachable by swapping adjacent commuting letters (BFS)."""
    start = word.letters
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for k in range(len(cur) - 1):
            if abs(cur[k] - cur[k + 1]) > 1:
                nxt = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > guard:
                        raise GuardExceeded(f"commutation class exceeds {guard}")
                    queue.append(nxt)
    return {Word(word.n, w) for w in seen}


def canonical_representative(word: Word) -> Word:
    """Lexicographically smallest word in the commutation class.

    Built greedily: repeatedly take the smallest letter among the minimal
    elements of the remaining heap.
    """
    h = Heap(word)
    mask, out = 0, []
    while len(out) < h.size:
        avail = [x for x in range(h.size)
                 if not mask >> x & 1 and h.down[x] & ~mask == 0]
        x = min(avail, key=lambda t: h.labels[t])
        out.append(h.labels[x])
        mask |= 1 << x
    return Word(word.n, tuple(out))
