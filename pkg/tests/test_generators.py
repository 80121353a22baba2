from itertools import product

import pytest

from p3count.errors import GraphConstructionError
from p3count.generators import (
    CreationTag, complete, complete_bipartite, cycle, disjoint_union, edgeless, graph_from_spec, paw, path,
    random_gnp, random_tree, star, threshold_from_sequence, tree_from_prufer,
)


def test_star_degrees():
    g = star(5)
    assert g.degree_sequence() == [4, 1, 1, 1, 1]
    assert g.neighbors(0) == (1, 2, 3, 4)


def test_small_families():
    assert path(1).edge_count == 0
    assert cycle(3) == complete(3)
    assert complete(5).edge_count == 10
    assert edgeless(0).vertex_count == 0
    assert complete_bipartite(2, 3).edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize("build", [
    lambda: star(0),
    lambda: path(0),
    lambda: cycle(2),
    lambda: complete(0),
    lambda: edgeless(-1),
    lambda: complete_bipartite(0, 0),
    lambda: random_gnp(3, 1.5),
])
def test_invalid_parameters(build):
    with pytest.raises(GraphConstructionError):
        build()


def test_disjoint_union_shifts_second_graph():
    g = disjoint_union(path(2), path(3))
    assert g.vertex_count == 5
    assert g.edges() == [(0, 1), (2, 3), (3, 4)]


def test_prufer_k2():
    assert tree_from_prufer([], 2).edges() == [(0, 1)]


def test_prufer_star_and_path():
    assert tree_from_prufer([0, 0, 0]) == star(5)
    assert tree_from_prufer([1, 2]) == path(4)


def test_prufer_errors():
    with pytest.raises(GraphConstructionError):
        tree_from_prufer([0], n=4)
    with pytest.raises(GraphConstructionError):
        tree_from_prufer([7, 0])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_prufer_is_a_bijection(n):
    edge_sets = {tuple(tree_from_prufer(seq).edges()) for seq in product(range(n), repeat=n - 2)}
    assert len(edge_sets) == n ** (n - 2)


@pytest.mark.slow
def test_prufer_is_a_bijection_on_seven_vertices():
    edge_sets = {tuple(tree_from_prufer(seq).edges()) for seq in product(range(7), repeat=5)}
    assert len(edge_sets) == 7 ** 5


def test_prufer_matches_networkx():
    nx = pytest.importorskip("networkx")
    for seq in ([3, 3, 3, 4], [0, 1, 2, 3, 4], [5, 0, 5, 2], [1, 1]):
        tree = nx.from_prufer_sequence(seq)
        expected = sorted(tuple(sorted(e)) for e in tree.edges())
        assert tree_from_prufer(seq).edges() == expected


def test_threshold_sequence_builds_the_paw(paw_threshold):
    assert paw_threshold.vertex_count == 4
    assert paw_threshold.edge_count == 4
    assert paw_threshold.degree_sequence() == paw().degree_sequence()
    assert paw_threshold.edges() == [(0, 1), (0, 3), (1, 3), (2, 3)]


def test_threshold_sequence_accepts_tags():
    tags = [CreationTag.ISOLATED, CreationTag.UNIVERSAL, CreationTag.UNIVERSAL]
    assert threshold_from_sequence(tags) == complete(3)
    assert threshold_from_sequence("UIII") == edgeless(4)


def test_threshold_sequence_errors():
    with pytest.raises(GraphConstructionError):
        threshold_from_sequence("")
    with pytest.raises(GraphConstructionError):
        threshold_from_sequence("IUX")


def test_random_graphs_are_reproducible():
    assert random_gnp(8, 0.5, seed=7) == random_gnp(8, 0.5, seed=7)
    assert random_gnp(10, 0.0, seed=1).edge_count == 0
    assert random_gnp(6, 1.0, seed=1) == complete(6)
    t = random_tree(12, seed=4)
    assert t.is_tree()
    assert t == random_tree(12, seed=4)
    assert random_tree(1).vertex_count == 1


@pytest.mark.parametrize("spec, expected", [
    ("gen:path:6", path(6)),
    ("star:5", star(5)),
    ("cycle:4", cycle(4)),
    ("complete:3", complete(3)),
    ("edgeless:2", edgeless(2)),
    ("bipartite:2:3", complete_bipartite(2, 3)),
    ("prufer:0,0,0", star(5)),
    ("threshold:IUIU", threshold_from_sequence("IUIU")),
    ("paw", paw()),
])
def test_graph_from_spec(spec, expected):
    assert graph_from_spec(spec) == expected


def test_graph_from_spec_random_families_use_seed():
    assert graph_from_spec("gnp:8:0.5", seed=7) == random_gnp(8, 0.5, seed=7)
    assert graph_from_spec("tree:9", seed=2) == random_tree(9, seed=2)


@pytest.mark.parametrize("spec", ["hypercube:3", "path", "path:x", "bipartite:2", "gnp:5"])
def test_graph_from_spec_errors(spec):
    with pytest.raises(GraphConstructionError):
        graph_from_spec(spec)
