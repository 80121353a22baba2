import json
import random

import pytest

from p3count.constants import ALGORITHMS
from p3count.core import best_structured_variant, count_graph, jsonable, noc_auto
from p3count.errors import CapExceededError, PreconditionError
from p3count.exact.generic import noc_generic
from p3count.exact.kl import KLPartition, greedy_kl_partition, noc_kl
from p3count.exact.structured import noc_structured
from p3count.generators import complete, complete_bipartite, cycle, disjoint_union, edgeless, paw, path, random_gnp, star
from p3count.graph import Graph
from p3count.oracle import noc_bruteforce


@pytest.mark.parametrize("g, expected", [
    (Graph(0), 1),
    (edgeless(256), 1 << 256),
    (star(10), 522),
    (disjoint_union(path(4), complete(2)), 48),
    (complete(5), 7),
    (cycle(5), 17),
])
def test_noc_auto_examples(g, expected):
    assert noc_auto(g) == expected


def test_noc_auto_matches_oracle():
    for seed in range(30):
        g = random_gnp(12, 0.15 + 0.02 * seed, seed=seed)
        assert noc_auto(g) == noc_bruteforce(g), g.to_dict()


def test_noc_auto_cap():
    with pytest.raises(CapExceededError):
        noc_auto(cycle(30), cap=4)


def test_best_structured_variant():
    variant, trace = best_structured_variant(star(6))
    assert variant == "A"
    assert trace.stars == [(0, (1, 2, 3))]


@pytest.mark.parametrize("algo", [a for a in ALGORITHMS if a != "tree"])
def test_every_algorithm_on_paw(algo):
    result = count_graph(paw(), algo)
    assert result.noc == 8
    assert result.algo == algo
    assert (result.n, result.m) == (4, 4)
    assert result.routes


def test_tree_algorithm():
    result = count_graph(path(5), "tree")
    assert result.noc == 21
    assert result.instrumentation["shape"] == "path"


def test_threshold_instrumentation():
    stats = count_graph(paw(), "threshold").instrumentation
    assert stats["creation_sequence"] == "IUIU"
    assert (stats["no_clique_vertex"], stats["one_clique_vertex"], stats["whole_clique"]) == (2, 4, 2)


def test_kl_with_explicit_partition():
    part = KLPartition(([0, 2], [1, 3]), ())
    result = count_graph(path(4), "kl", partition=part)
    assert result.noc == 12
    assert (result.instrumentation["k"], result.instrumentation["l"]) == (2, 0)


def test_auto_routes():
    result = count_graph(disjoint_union(path(4), edgeless(2)))
    assert result.noc == 48
    assert result.routes == ["isolated x2", "tree"]


@pytest.mark.parametrize("g, algo", [
    (cycle(5), "tree"),
    (path(4), "threshold"),
    (path(3), "quantum"),
])
def test_preconditions(g, algo):
    with pytest.raises(PreconditionError):
        count_graph(g, algo)


def test_to_dict_keeps_big_counts_exact():
    data = count_graph(edgeless(64)).to_dict()
    assert data["noc"] == "18446744073709551616"
    assert data["instrumentation"]["routes"] == ["isolated x64"]
    json.dumps(data)


def test_jsonable():
    assert jsonable({"a": 1 << 60, "b": [True, None, 3], 4: {2, 1}}) == {
        "a": str(1 << 60), "b": [True, None, 3], "4": [1, 2],
    }


def _seeded_sweep(count: int = 300, n_max: int = 14, seed: int = 2024):
    rng = random.Random(seed)
    densities = (0.1, 0.3, 0.5, 0.8)
    for i in range(count):
        yield random_gnp(rng.randint(1, n_max), densities[i % len(densities)], seed=rng.randrange(1 << 30))


def _named_graphs():
    yield paw()
    for n in range(1, 9):
        yield path(n)
        yield star(n)
    for n in range(3, 9):
        yield cycle(n)
    for n in range(1, 7):
        yield complete(n)
    for a, b in ((1, 4), (2, 3), (3, 3), (2, 5)):
        yield complete_bipartite(a, b)


@pytest.mark.slow
def test_every_counter_matches_oracle_on_seeded_sweep():
    graphs = [*_named_graphs(), *_seeded_sweep()]
    for g in graphs:
        expected = noc_bruteforce(g)
        assert noc_generic(g) == expected, g.to_dict()
        assert noc_kl(g, greedy_kl_partition(g)) == expected, g.to_dict()
        assert noc_auto(g) == expected, g.to_dict()
        for variant in ("A", "B", "C"):
            result = noc_structured(g, variant)
            assert result.noc == expected, (variant, g.to_dict())
            assert result.colorings_enumerated == result.bound.predicted, (variant, g.to_dict())
            assert result.bound.block_bound_holds, (variant, g.to_dict())
            assert result.bound.block_patterns ** 3 <= 5 ** result.trace.p
