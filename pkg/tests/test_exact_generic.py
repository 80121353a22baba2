import pytest

from p3count.errors import CapExceededError, PreconditionError
from p3count.exact.generic import enumerate_generic, noc_generic
from p3count.generators import complete, cycle, edgeless, paw, path, random_gnp, star
from p3count.oracle import noc_bruteforce


@pytest.mark.parametrize("g, i, expected", [
    (star(4), [1, 2, 3], 12),
    (cycle(5), [0, 2], 17),
    (cycle(5), [1, 3], 17),
    (edgeless(6), range(6), 64),
    (paw(), [3], 8),
    (path(6), None, 37),
])
def test_generic_examples(g, i, expected):
    assert noc_generic(g, i) == expected


def test_generic_matches_oracle_on_random_graphs():
    for seed in range(25):
        g = random_gnp(10, 0.35, seed=seed)
        assert noc_generic(g) == noc_bruteforce(g), g.to_dict()


def test_instrumentation():
    result = enumerate_generic(star(4), [1, 2, 3])
    assert result.colorings_enumerated == 2
    assert result.colorings_consistent == 2
    assert result.colorings_valid == 2
    assert result.independent_size == 3
    assert result.aux_vertices_max == 3
    stats = result.instrumentation()
    assert stats["colorings_enumerated"] == 2


def test_empty_independent_set_enumerates_every_coloring():
    result = enumerate_generic(path(4), [])
    assert result.colorings_enumerated == 16
    assert result.colorings_valid == result.noc == 12


def test_generic_requires_independent_set():
    with pytest.raises(PreconditionError):
        noc_generic(path(3), [0, 1])


def test_generic_cap_is_a_refusal():
    with pytest.raises(CapExceededError) as info:
        noc_generic(complete(5), cap=3)
    assert info.value.requested == 4
