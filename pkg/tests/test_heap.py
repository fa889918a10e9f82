import pytest
from hypothesis import given, strategies as st

from cbirkhoff.cambrian import heap_grid, longest_heap
from cbirkhoff.coxeter import all_coxeter_elements
from cbirkhoff.errors import GuardExceeded
from cbirkhoff.group import Word, word_to_perm
from cbirkhoff.heap import (Heap, Poset, canonical_representative, commutation_class,
                            count_linear_extensions, heap_correspondence,
                            labeled_linear_extensions, linear_extensions, order_ideals)

SAMPLE_WORD = Word.parse("1214321432", 4)


def test_heap_covers_of_example_word():
    h = Heap(SAMPLE_WORD)
    assert h.covers() == sorted([(1, 2), (2, 3), (2, 5), (4, 5), (3, 6), (5, 6), (5, 8),
                                 (6, 7), (6, 9), (8, 9), (7, 10), (9, 10)])


def test_example_linear_extensions():
    words = {str(w) for w in labeled_linear_extensions(Heap(SAMPLE_WORD))}
    assert {"1243124312", "4123412312"} <= words


def test_chain_and_antichain():
    assert count_linear_extensions(Heap(Word.parse("121", 2))) == 1
    assert count_linear_extensions(Heap(Word.parse("135", 5))) == 6
    assert len(order_ideals(Heap(Word.parse("135", 5)))) == 8


def test_empty_word():
    h = Heap(Word(3, ()))
    assert h.size == 0 and count_linear_extensions(h) == 1
    assert [i.mask for i in order_ideals(h)] == [0]


def test_poset_from_relations():
    p = Poset.from_relations(6, [(1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)])
    assert p.leq(1, 6) and not p.leq(4, 5)
    assert len(order_ideals(p)) == 9
    assert count_linear_extensions(p) == 4
    with pytest.raises(ValueError):
        Poset.from_relations(2, [(1, 2), (2, 1)])


def test_ideal_guard():
    with pytest.raises(GuardExceeded):
        order_ideals(Heap(Word.parse("13579", 9)), guard=10)
    with pytest.raises(GuardExceeded):
        list(linear_extensions(Heap(SAMPLE_WORD), guard=5))


def test_json_schema():
    data = Heap(Word.parse("121", 2)).to_json()
    assert data == {"n": 2, "length": 3, "labels": [1, 2, 1],
                    "covers": [[1, 2], [2, 3]], "coords": None}


def test_canonical_representative():
    assert str(canonical_representative(Word.parse("31", 3))) == "13"
    assert str(canonical_representative(Word.parse("4123412312", 4))) == "1214321432"
    cls = commutation_class(SAMPLE_WORD)
    assert min(w.letters for w in cls) == canonical_representative(SAMPLE_WORD).letters


words = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=8)))


@given(words)
def test_commutation_class_is_extension_set(data):
    n, letters = data
    w = Word(n, tuple(letters))
    h = Heap(w)
    assert commutation_class(w) == labeled_linear_extensions(h)
    assert count_linear_extensions(h) >= len(commutation_class(w))
    # each word in the class names the same permutation and the same heap
    for v in commutation_class(w):
        assert word_to_perm(v) == word_to_perm(w)
        assert heap_correspondence(Heap(v), h) is not None


@given(words)
def test_ideals_are_closed_downward(data):
    n, letters = data
    h = Heap(Word(n, tuple(letters)))
    for ideal in order_ideals(h):
        for y in ideal.members():
            assert all(x in ideal for x in range(1, h.size + 1) if h.leq(x, y))


def _maximal_chains(p):
    # independent count: walk the ideal lattice by adding one element at a time
    masks = {i.mask for i in order_ideals(p)}
    memo = {}

    def walk(mask):
        if mask == (1 << p.size) - 1:
            return 1
        if mask not in memo:
            memo[mask] = sum(walk(mask | 1 << x) for x in range(p.size)
                             if not mask >> x & 1 and mask | 1 << x in masks)
        return memo[mask]
    return walk(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_extension_counts_agree(n):
    for c in all_coxeter_elements(n):
        h = longest_heap(c)
        e = count_linear_extensions(h)
        assert len(labeled_linear_extensions(h)) == e
        assert len(list(linear_extensions(h))) == e
        assert _maximal_chains(h) == e
        assert len(commutation_class(h.word)) == e


def test_correspondence_rejects_different_heaps():
    assert heap_correspondence(Heap(Word.parse("12", 2)), Heap(Word.parse("21", 2))) is None
    assert heap_correspondence(Heap(Word.parse("13", 3)), Heap(Word.parse("31", 3))) is not None


@pytest.mark.parametrize("n", range(1, 9))
def test_grid_heap_matches_longest_heap(n):
    for c in all_coxeter_elements(n):
        assert heap_correspondence(heap_grid(c), longest_heap(c)) is not None
