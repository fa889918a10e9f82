import pytest

from cbirkhoff.cambrian import (a_sequence, a_sequence_of_set, c_sorting_passes,
                                c_sorting_word, diagonal_reading_word, grid_points, heap_grid,
                                is_c_singleton, is_c_singleton_by_patterns,
                                is_c_singleton_oracle, is_c_sortable, is_c_sortable_by_patterns,
                                longest_heap, singleton_ideal, singletons)
from cbirkhoff.coxeter import all_coxeter_elements, parse_coxeter, tamari
from cbirkhoff.errors import GuardExceeded
from cbirkhoff.group import Permutation, Word, all_permutations, is_reduced, word_to_perm
from cbirkhoff.heap import count_linear_extensions, order_ideals

P = Permutation.parse


def runs(word, lengths):
    out, k = [], 0
    for m in lengths:
        out.append("".join(map(str, word.letters[k:k + m])))
        k += m
    return out


def test_sorting_word_examples():
    c = tamari(4)
    assert c_sorting_passes(c, P("42351")) == [[1, 2, 3, 4], [2], [1]]
    assert not is_c_sortable(c, P("42351"))
    assert c_sorting_passes(c, P("43215")) == [[1, 2, 3], [1, 2], [1]]
    assert is_c_sortable(c, P("43215"))
    assert c_sorting_word(c, Permutation.identity(4)).letters == ()


@pytest.mark.parametrize("n", range(1, 7))
def test_tamari_longest_sorting_word(n):
    passes = c_sorting_passes(tamari(n), Permutation.longest(n))
    assert passes == [list(range(1, k + 1)) for k in range(n, 0, -1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_sorting_word_is_reduced_word(n):
    for c in all_coxeter_elements(n):
        for w in all_permutations(n):
            u = c_sorting_word(c, w)
            assert word_to_perm(u) == w and is_reduced(u)


def test_singleton_examples():
    c = parse_coxeter("125436", 6)
    assert not is_c_singleton(c, P("2167345"))
    assert is_c_singleton(c, P("3672145"))


def test_singletons_of_132():
    got = sorted(str(s.perm) for s in singletons(parse_coxeter("132", 3)))
    assert got == sorted(["1234", "2134", "1243", "2143", "2413", "4213", "2431", "4231", "4321"])


@pytest.mark.parametrize("n", range(1, 9))
def test_tamari_singleton_count(n):
    assert len(singletons(tamari(n))) == 2 ** n


def test_tamari_extension_count():
    assert count_linear_extensions(longest_heap(tamari(4))) == 12


def test_rank_guard():
    with pytest.raises(GuardExceeded):
        singletons(tamari(9))


@pytest.mark.parametrize("n", range(1, 5))
def test_sortable_blocks_versus_patterns(n):
    for c in all_coxeter_elements(n):
        for w in all_permutations(n):
            assert is_c_sortable(c, w) == is_c_sortable_by_patterns(c, w)


@pytest.mark.parametrize("n", range(1, 5))
def test_three_singleton_tests_agree(n):
    for c in all_coxeter_elements(n):
        image = {s.perm for s in singletons(c)}
        for w in all_permutations(n):
            a = is_c_singleton(c, w)
            assert a == (w in image) == is_c_singleton_oracle(c, w)
            assert a == is_c_singleton_by_patterns(c, w)
            if a:
                assert is_c_sortable(c, w)


def test_three_singleton_tests_agree_n5_sampled():
    import random
    rng = random.Random(5)
    perms = list(all_permutations(5))
    for c in all_coxeter_elements(5):
        image = {s.perm for s in singletons(c)}
        for w in list(image) + rng.sample(perms, 60):
            assert is_c_singleton(c, w) == (w in image) == is_c_singleton_oracle(c, w)


@pytest.mark.parametrize("n", range(1, 7))
def test_singleton_ideal_roundtrip(n):
    for c in all_coxeter_elements(n):
        h = longest_heap(c)
        sing = singletons(c)
        assert len({s.perm for s in sing}) == len(sing)
        for s in sing:
            ideal = singleton_ideal(c, s.perm, h)
            assert ideal == s.ideal
            assert h.subword(ideal) == c_sorting_word(c, s.perm)


def test_singleton_ideal_rejects_non_singletons():
    with pytest.raises(ValueError):
        singleton_ideal(parse_coxeter("125436", 6), P("2167345"))


@pytest.mark.parametrize("text,n,lengths,expected", [
    ("4321657", 7, [4, 6, 7, 5, 3, 2, 1],
     ["4321", "654321", "7654321", "76543", "765", "76", "7"]),
    ("1432657", 7, [1, 4, 6, 7, 5, 3, 2],
     ["1", "4321", "654321", "7654321", "76543", "765", "76"]),
    ("1357246", 7, [1, 3, 5, 7, 6, 4, 2],
     ["1", "321", "54321", "7654321", "765432", "7654", "76"]),
    ("21365487", 8, [2, 3, 6, 8, 7, 5, 4, 1],
     ["21", "321", "654321", "87654321", "8765432", "87654", "8765", "8"]),
])
def test_diagonal_reading_word(text, n, lengths, expected):
    r = diagonal_reading_word(parse_coxeter(text, n))
    assert len(r) == sum(lengths) == n * (n + 1) // 2
    assert runs(r, lengths) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_grid_reads_diagonal_word(n):
    for c in all_coxeter_elements(n):
        pts = grid_points(c)
        assert len(set(pts)) == len(pts) == n * (n + 1) // 2
        assert heap_grid(c).word == diagonal_reading_word(c)


@pytest.mark.parametrize("n", range(1, 8))
def test_equal_labels_climb_the_grid(n):
    for c in all_coxeter_elements(n):
        h = heap_grid(c)
        for x in range(1, h.size + 1):
            for y in range(1, h.size + 1):
                if x != y and h.label(x) == h.label(y) and h.leq(x, y):
                    assert h.coords[x - 1][1] < h.coords[y - 1][1]


@pytest.mark.parametrize("n", range(1, 7))
def test_reading_word_prefixes_are_singletons(n):
    for c in all_coxeter_elements(n):
        h = heap_grid(c)
        for i in range(h.size + 1):
            mask = (1 << i) - 1
            assert h.is_ideal(mask)
            assert is_c_singleton(c, word_to_perm(h.subword(mask)))


def test_a_sequence_worked_example():
    c = parse_coxeter("21365487", 8)
    w = word_to_perm(Word.parse("265876878", 8))
    assert singleton_ideal(c, w, heap_grid(c)).members() == [1, 6, 7, 12, 13, 14, 20, 21, 27]
    assert a_sequence(c, w) == [27, 26, 21, 19, 14, 11, 7, 5, 1]


def test_a_sequence_prefix_ideal():
    assert a_sequence_of_set({1, 2, 3, 4}) == [4]
    with pytest.raises(ValueError):
        a_sequence_of_set({2, 3})


def test_ideal_count_equals_singletons():
    for n in range(1, 6):
        for c in all_coxeter_elements(n):
            assert len(order_ideals(heap_grid(c))) == sum(
                1 for w in all_permutations(n) if is_c_singleton(c, w))
