import random

import pytest
from hypothesis import given, settings

from esdom.exceptions import InvalidGraphError
from esdom.generators import complete, complete_bipartite, cycle, path, star
from esdom.graph import Graph
from esdom.rank import adjacency_matrix, modular_rank, rank, rank_bound_check, rank_mod_p
from esdom.solver import gamma_esp

from .conftest import graphs


@pytest.mark.parametrize(
    "m, r",
    [
        ([[0]], 0),
        ([[1, 2], [2, 4]], 1),
        ([[2, 0], [0, 3]], 2),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
        ([[0, 0, 1], [0, 0, 0]], 1),
        ([], 0),
    ],
)
def test_rank_small_matrices(m, r):
    assert rank(m) == r


@pytest.mark.parametrize("g, r", [(complete_bipartite(2, 3), 2), (cycle(4), 2), (cycle(5), 5),
                                  (path(4), 4), (complete(4), 4), (star(5), 2)])
def test_adjacency_ranks(g, r):
    assert rank(adjacency_matrix(g)) == r


def test_mod_two_can_undercount():
    # K3 is singular over GF(2) but not over Q
    a = adjacency_matrix(complete(3))
    assert rank_mod_p(a, 2) == 2 and rank(a) == 3


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_bareiss_agrees_with_modular(g):
    a = adjacency_matrix(g)
    assert rank(a) == modular_rank(a)


@given(graphs(min_n=2, max_n=9))
def test_rank_permutation_invariant(g):
    perm = list(range(g.n))
    random.Random(g.m).shuffle(perm)
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert rank(adjacency_matrix(g)) == rank(adjacency_matrix(h))


def test_bound_on_complete_bipartite():
    g = complete_bipartite(2, 3)
    rb = rank_bound_check(g, gamma_esp(g))
    assert rb == (2, 2, True, True, True)
    rb = rank_bound_check(star(5), gamma_esp(star(5)))
    assert rb.holds and not rb.equality and not rb.complete_bipartite
    assert rb.characterization_ok


def test_bound_needs_connected_graph():
    with pytest.raises(InvalidGraphError):
        rank_bound_check(Graph.empty(2), 2)
