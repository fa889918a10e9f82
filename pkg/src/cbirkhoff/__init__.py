"""Permutation matrices of c-singletons in A_n, their affine relations,
and the unimodular map onto an order polytope of a heap."""

from .cambrian import (a_sequence, c_sorting_word, diagonal_reading_word, heap_grid,
                       is_c_singleton, is_c_sortable, singleton_ideal, singletons)
from .coxeter import (CoxeterElement, all_coxeter_elements, bipartite, inverse_coxeter,
                      make_coxeter, nu, parse_coxeter, sigma, tamari)
from .errors import GuardExceeded, InconsistentProjection, TheoremViolation
from .group import Permutation, Word, coxeter_length, permutation_matrix, word_to_perm
from .heap import Heap, Poset, count_linear_extensions, heap_of_word, order_ideals
from .polytope import affine_dimension, ideal_cloud_probe, normalized_volume, order_polytope
from .projection import project, projection_indices, reconstruct
from .relations import independent_relation_set, zero_entries
from .transfer import compute_U, o_vector, verify_main_theorem

__version__ = "0.1.0"
