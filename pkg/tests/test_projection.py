import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cbirkhoff.cambrian import singletons
from cbirkhoff.coxeter import all_coxeter_elements, parse_coxeter, sigma, tamari
from cbirkhoff.group import permutation_matrix
from cbirkhoff.projection import _top_rows, project, projection_indices, reconstruct
from cbirkhoff.relations import all_relations, zero_entries

LABELS_1432657 = {
    (1, 2): 28, (1, 5): 24, (1, 7): 18, (1, 8): 11, (2, 5): 25, (2, 7): 19, (2, 8): 12,
    (3, 5): 26, (3, 6): 6, (3, 7): 20, (3, 8): 13, (4, 5): 27, (4, 6): 7, (4, 7): 21,
    (4, 8): 14, (5, 6): 8, (5, 7): 22, (5, 8): 15, (6, 2): 3, (6, 7): 23, (6, 8): 16,
    (7, 1): 4, (7, 2): 1, (7, 3): 9, (7, 8): 17, (8, 1): 2, (8, 3): 5, (8, 4): 10,
}

BIPARTITE_LABELS = {
    (7, 2): 1, (8, 1): 2, (4, 5): 3, (6, 2): 4, (7, 1): 5, (8, 3): 6, (2, 7): 7, (3, 7): 8,
    (4, 7): 9, (5, 7): 10, (6, 7): 11, (8, 5): 12, (1, 4): 25, (2, 4): 26, (3, 4): 27,
    (1, 2): 28,
    **{(i, 8): 12 + i for i in range(1, 8)},
    **{(i, 6): 19 + i for i in range(1, 6)},
}


def labels(c):
    return {e: k for k, e in enumerate(projection_indices(c), 1)}


def test_labels_1432657():
    assert labels(parse_coxeter("1432657", 7)) == LABELS_1432657


def test_labels_bipartite():
    assert labels(parse_coxeter("1357246", 7)) == BIPARTITE_LABELS


def test_tamari_reads_columns_right_to_left():
    for n in range(1, 7):
        expected = [(i, j) for j in range(n + 1, 1, -1) for i in range(1, j)]
        assert projection_indices(tamari(n)) == expected


def test_n_equals_one():
    c = tamari(1)
    assert projection_indices(c) == [(1, 2)]
    assert reconstruct(c, [0]) == [[1, 0], [0, 1]]
    assert reconstruct(c, [1]) == [[0, 1], [1, 0]]


@pytest.mark.parametrize("n", range(1, 9))
def test_index_set_shape(n):
    for c in all_coxeter_elements(n):
        idx = projection_indices(c)
        assert len(idx) == len(set(idx)) == comb(n + 1, 2)
        assert not set(idx) & zero_entries(c)


@pytest.mark.parametrize("n", range(1, 9))
def test_bottom_rows_form_sigma_window(n):
    for c in all_coxeter_elements(n):
        sg = sigma(c).image
        known = set(projection_indices(c)) | zero_entries(c)
        top = _top_rows(c)
        for k in range(n + 1, 0, -1):
            if k in top:
                break
            undetermined = {j for j in range(1, n + 2) if (k, j) not in known}
            t = n + 3 - k
            windows = [{k} | set(sg[a - 1:a + t - 2]) for a in range(1, n + 4 - t)]
            assert undetermined in windows


@pytest.mark.parametrize("n", range(1, 7))
def test_roundtrip_on_singletons(n):
    for c in all_coxeter_elements(n):
        seen = set()
        for s in singletons(c):
            x = permutation_matrix(s.perm)
            v = tuple(project(c, x))
            seen.add(v)
            assert reconstruct(c, v) == [list(r) for r in x]
        assert len(seen) == len(singletons(c))


@pytest.mark.parametrize("n", range(2, 7))
def test_roundtrip_on_affine_combinations(n):
    rng = random.Random(n)
    for c in all_coxeter_elements(n):
        mats = [permutation_matrix(s.perm) for s in singletons(c)]
        weights = [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in mats]
        weights[0] += 1 - sum(weights)
        x = [[sum(w * m[i][j] for w, m in zip(weights, mats)) for j in range(n + 1)]
             for i in range(n + 1)]
        assert reconstruct(c, project(c, x)) == x


@settings(max_examples=60)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.sampled_from(all_coxeter_elements(n)),
    st.lists(st.integers(-5, 5), min_size=comb(n + 1, 2), max_size=comb(n + 1, 2)))))
def test_any_vector_lifts_into_affine_hull(data):
    c, v = data
    x = reconstruct(c, v)
    assert project(c, x) == v
    assert all(r.holds(x) for r in all_relations(c))
    assert all(val.denominator == 1 for row in x for val in row)


def test_wrong_length():
    with pytest.raises(ValueError):
        reconstruct(tamari(3), [0, 0])
