import random

import pytest

from p3count.errors import PreconditionError
from p3count.exact.independent_sets import (
    IndependentSetStrategy, count_independent_masks, fibonacci, find_independent_set, greedy_independent_mask,
    is_independent, lucas, noi_branching,
)
from p3count.extremal_lab import all_labeled_graphs
from p3count.generators import complete, complete_bipartite, cycle, disjoint_union, edgeless, path, random_gnp, star
from p3count.graph import Graph
from p3count.oracle import noi_bruteforce


def test_sequences():
    assert [fibonacci(k) for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [lucas(k) for k in range(6)] == [2, 1, 3, 4, 7, 11]


@pytest.mark.parametrize("g, expected", [
    (cycle(5), 11),
    (path(4), 8),
    (edgeless(20), 1 << 20),
    (complete(6), 7),
    (star(6), 33),
    (Graph(0), 1),
])
def test_noi_examples(g, expected):
    assert noi_branching(g) == expected


def test_noi_matches_oracle():
    for seed in range(40):
        g = random_gnp(11, 0.3 if seed % 2 else 0.6, seed=seed)
        assert noi_branching(g) == noi_bruteforce(g), g.to_dict()


@pytest.mark.parametrize("n", range(1, 6))
def test_noi_on_every_labeled_graph(n):
    for g in all_labeled_graphs(n):
        assert noi_branching(g) == noi_bruteforce(g), g.to_dict()


@pytest.mark.slow
def test_noi_on_every_labeled_graph_n6():
    for g in all_labeled_graphs(6):
        assert noi_branching(g) == noi_bruteforce(g), g.to_dict()


@pytest.mark.slow
def test_noi_seeded_sweep_up_to_16():
    rng = random.Random(16)
    for _ in range(200):
        g = random_gnp(rng.randint(1, 16), rng.choice((0.1, 0.3, 0.5, 0.8)), seed=rng.randrange(1 << 30))
        assert noi_branching(g) == noi_bruteforce(g), g.to_dict()


def test_noi_factorizes_over_components():
    g = disjoint_union(cycle(7), path(6))
    assert noi_branching(g) == lucas(7) * fibonacci(8)


def test_count_on_dict_adjacency():
    # path 1 - 3 - 5 given as a sparse map
    adjacency = {1: 0b1000, 3: 0b100010, 5: 0b1000}
    assert count_independent_masks(adjacency, 0b101010) == 5


def test_greedy_on_cycle6():
    chosen = find_independent_set(cycle(6))
    assert chosen == {0, 2, 4}


def test_greedy_guarantee():
    for seed in range(20):
        g = random_gnp(14, 0.3, seed=seed)
        chosen = find_independent_set(g, IndependentSetStrategy.GREEDY)
        assert is_independent(g, chosen)
        assert len(chosen) * (g.max_degree() + 1) >= g.vertex_count


def test_greedy_on_clique():
    assert len(find_independent_set(complete(4))) == 1
    assert greedy_independent_mask(complete(3).neighbor_masks, 0) == 0
    assert find_independent_set(Graph(0)) == set()


def test_bipartite_strategy():
    assert find_independent_set(complete_bipartite(3, 5), "bipartite") == {3, 4, 5, 6, 7}
    assert len(find_independent_set(path(7), IndependentSetStrategy.BIPARTITE)) == 4
    with pytest.raises(PreconditionError):
        find_independent_set(cycle(5), "bipartite")


def test_provided_strategy():
    assert find_independent_set(cycle(6), "provided", provided=[1, 4]) == {1, 4}
    with pytest.raises(PreconditionError):
        find_independent_set(cycle(6), "provided", provided=[1, 2])
    with pytest.raises(PreconditionError):
        find_independent_set(cycle(6), "provided")
    with pytest.raises(ValueError):
        find_independent_set(cycle(6), "planar")
