import pytest

from p3count.errors import CapExceededError
from p3count.exact.structured import block_patterns, noc_structured, star_local_patterns, star_patterns
from p3count.generators import complete, cycle, disjoint_union, path, random_gnp, star
from p3count.oracle import noc_bruteforce


@pytest.mark.parametrize("leaves, count", [(3, 12), (4, 21), (5, 38)])
def test_star_local_patterns(leaves, count):
    assert len(star_local_patterns(leaves)) == count


def test_block_patterns():
    assert block_patterns({1, 3}) == [0, 0b10, 0b1000, 0b1010]
    assert block_patterns({2}) == [0, 0b100]


def test_star_patterns_are_relabelled():
    patterns = star_patterns(5, (0, 2, 7))
    assert len(patterns) == 12
    assert all(p & ~0b10100101 == 0 for p in patterns)
    assert 0b10100101 in patterns


@pytest.mark.parametrize("g, expected", [
    (complete(4), 6),
    (star(6), 38),
    (cycle(7), 51),
    (path(7), 65),
])
@pytest.mark.parametrize("variant", ["A", "B", "C"])
def test_structured_examples(g, expected, variant):
    assert noc_structured(g, variant).noc == expected


@pytest.mark.parametrize("variant", ["A", "B", "C"])
def test_structured_matches_oracle(variant):
    for seed in range(20):
        g = random_gnp(11, 0.25 + 0.02 * seed, seed=seed)
        assert noc_structured(g, variant).noc == noc_bruteforce(g), g.to_dict()


def test_enumeration_matches_prediction():
    g = disjoint_union(disjoint_union(complete(4), star(5)), path(3))
    result = noc_structured(g, "A")
    assert result.colorings_enumerated == result.bound.predicted
    stats = result.instrumentation()
    assert stats["variant"] == "A"
    assert stats["colorings_predicted"] == result.bound.predicted
    assert stats["p"] + stats["q"] + stats["r"] + stats["t"] == g.vertex_count


def test_structured_cap():
    with pytest.raises(CapExceededError) as info:
        noc_structured(cycle(7), "A", cap=3)
    assert info.value.requested == 4
