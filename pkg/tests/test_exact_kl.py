import pytest

from p3count.errors import CapExceededError, PreconditionError
from p3count.exact.kl import KLPartition, enumerate_kl, greedy_kl_partition, noc_kl, parse_partition, recognize_kl
from p3count.generators import complete, cycle, edgeless, paw, path, random_gnp
from p3count.oracle import noc_bruteforce

P4_TEXT = """
# path 0-1-2-3
A 0 2
A 1 3
"""


def test_parse_partition():
    part = parse_partition(P4_TEXT)
    assert part.independent_parts == ({0, 2}, {1, 3})
    assert part.clique_parts == ()
    assert (part.k, part.l) == (2, 0)


@pytest.mark.parametrize("text, line", [
    ("B 1 2", 1),
    ("A 1 x", 1),
    ("A 0 2\nC", 2),
    ("# only a comment\n\nA", 3),
])
def test_parse_partition_errors(text, line):
    with pytest.raises(PreconditionError, match=f"line {line}"):
        parse_partition(text)


def test_to_text_round_trip():
    part = KLPartition(([2, 0],), ([3, 1],))
    assert part.to_text() == "A 0 2\nC 1 3"
    assert parse_partition(part.to_text()) == part


@pytest.mark.parametrize("part", [
    KLPartition(([0, 2],), ()),
    KLPartition(([0, 2], [1, 2, 3]), ()),
    KLPartition(([0, 1], [2, 3]), ()),
    KLPartition(([0, 2], [1, 4]), ()),
    KLPartition(([0],), ([1, 3],)),
])
def test_validate_rejects_bad_partitions(part):
    with pytest.raises(PreconditionError):
        part.validate(path(4))


def test_noc_kl_on_bipartite_path():
    assert noc_kl(path(4), parse_partition(P4_TEXT)) == 12


def test_noc_kl_on_clique():
    result = enumerate_kl(complete(5), KLPartition((), (range(5),)))
    assert result.noc == 7
    assert result.colorings_enumerated == 7
    assert result.independent_size == 0


def test_kl_cap():
    with pytest.raises(CapExceededError):
        noc_kl(complete(5), KLPartition((), (range(5),)), cap=2)


@pytest.mark.parametrize("g, k, l", [
    (edgeless(4), 1, 0),
    (complete(4), 0, 1),
    (path(6), 2, 0),
    (paw(), 1, 1),
    (cycle(4), 0, 2),
])
def test_recognize_kl(g, k, l):
    part = recognize_kl(g, k, l)
    assert part is not None
    part.validate(g)
    assert noc_kl(g, part) == noc_bruteforce(g)


def test_recognize_kl_misses():
    assert recognize_kl(path(3), 1, 0) is None
    assert recognize_kl(path(3), 0, 1) is None
    assert recognize_kl(cycle(5), 2, 0) is None
    assert recognize_kl(cycle(5), 1, 1) is None
    with pytest.raises(PreconditionError):
        recognize_kl(path(3), 3, 0)


def test_greedy_partition_matches_oracle():
    for seed in range(25):
        g = random_gnp(10, 0.45, seed=seed)
        part = greedy_kl_partition(g)
        part.validate(g)
        assert noc_kl(g, part) == noc_bruteforce(g), g.to_dict()
