import random
from itertools import product

import pytest

from p3count.constants import TABLE1_PATHS, TABLE1_STARS
from p3count.errors import PreconditionError
from p3count.generators import cycle, path, random_tree, star, tree_from_prufer
from p3count.graph import Graph
from p3count.oracle import noc_bruteforce
from p3count.tree_count import (
    LEAF, TriCounts, classify_tree, combine_children, leaf_decomposition, noc_path_recurrence, noc_rooted,
    noc_star_closed, noc_tree, path_tricounts, root_tree, subtree_counts,
)

SPIDER = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def test_root_path_at_endpoint():
    t = root_tree(path(3), 0)
    assert t.parent == (None, 0, 1)
    assert t.children == ((1,), (2,), ())
    assert t.order == (0, 1, 2)


def test_root_star_at_center():
    t = root_tree(star(5), 0)
    assert t.children[0] == (1, 2, 3, 4)
    assert all(t.parent[leaf] == 0 for leaf in range(1, 5))


def test_root_requires_tree():
    with pytest.raises(PreconditionError):
        root_tree(cycle(3), 0)


def test_single_vertex_counts():
    assert noc_rooted(root_tree(Graph(1), 0)) == TriCounts(1, 1, 1)
    assert combine_children([]) == LEAF


def test_path2_counts():
    counts = noc_rooted(root_tree(path(2), 0))
    assert counts == TriCounts(b=2, w=2, g=1)
    assert counts.total == 4


@pytest.mark.parametrize("g, expected", [
    (path(6), 37),
    (star(7), 71),
    (path(10), 351),
    (tree_from_prufer([1, 1]), 12),
    (SPIDER, 20),
])
def test_noc_tree_examples(g, expected):
    assert noc_tree(g) == expected


def test_noc_tree_is_root_independent():
    for seed in range(20):
        t = random_tree(11, seed=seed)
        assert {noc_tree(t, root) for root in t.vertices()} == {noc_tree(t)}


def test_noc_tree_handles_long_paths():
    assert noc_tree(path(5000)) == noc_path_recurrence(5000)


def test_closed_forms_match_table():
    for n in range(1, 11):
        assert noc_path_recurrence(n) == TABLE1_PATHS[n - 1]
        assert noc_star_closed(n) == TABLE1_STARS[n - 1]


@pytest.mark.parametrize("n", [0, -3])
def test_closed_forms_reject_bad_n(n):
    with pytest.raises(PreconditionError):
        noc_star_closed(n)
    with pytest.raises(PreconditionError):
        noc_path_recurrence(n)
    with pytest.raises(PreconditionError):
        path_tricounts(n)


def test_recurrence_matches_dp_up_to_40():
    for n in range(1, 41):
        assert noc_path_recurrence(n) == noc_tree(path(n))
        assert path_tricounts(n) == noc_rooted(root_tree(path(n), 0))


def test_star_dominates_path():
    for n in range(1, 61):
        z, s = noc_path_recurrence(n), noc_star_closed(n)
        assert z <= s
        assert (z == s) == (n <= 5)


def test_classify_tree():
    assert classify_tree(star(5)) == "star"
    assert classify_tree(path(5)) == "path"
    assert classify_tree(path(3)) == "star"
    assert classify_tree(SPIDER) == "branching"
    with pytest.raises(PreconditionError):
        classify_tree(cycle(4))


def test_leaf_decomposition():
    parts = leaf_decomposition(SPIDER, 4)
    assert parts["noc"] == 20
    assert parts["rebuilt"] == parts["noc"]
    with pytest.raises(PreconditionError):
        leaf_decomposition(SPIDER, 0)
    with pytest.raises(PreconditionError):
        leaf_decomposition(path(2), 0)


def _all_trees(n):
    for seq in product(range(n), repeat=n - 2):
        yield tree_from_prufer(seq)


def _check_against_oracle(n):
    for t in _all_trees(n):
        assert noc_tree(t) == noc_bruteforce(t), t.to_dict()
        assert all(c.g <= c.w for c in subtree_counts(root_tree(t)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_all_small_trees_match_oracle(n):
    _check_against_oracle(n)


@pytest.mark.slow
def test_all_trees_on_seven_vertices_match_oracle():
    _check_against_oracle(7)


@pytest.mark.slow
def test_random_trees_match_oracle():
    rng = random.Random(0)
    for _ in range(500):
        t = random_tree(rng.randint(8, 14), seed=rng.randrange(1 << 30))
        assert noc_tree(t) == noc_bruteforce(t)
