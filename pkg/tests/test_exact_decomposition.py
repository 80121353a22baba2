import pytest

from p3count.errors import PreconditionError
from p3count.exact.decomposition import decompose, enumeration_bound, has_triangle
from p3count.exact.independent_sets import is_independent
from p3count.generators import complete, cycle, disjoint_union, edgeless, path, random_gnp, star
from p3count.graph import Graph, mask_of


def test_clique_is_one_block():
    trace = decompose(complete(4))
    assert trace.blocks == [{0, 1, 2, 3}]
    assert (trace.p, trace.q, trace.r, trace.t) == (4, 0, 0, 0)
    bound = enumeration_bound(trace)
    assert bound.block_patterns == 6
    assert bound.block_bound_holds
    assert bound.predicted == 6


def test_star_variant_b():
    trace = decompose(star(5), "B")
    assert trace.blocks == []
    assert trace.stars == [(0, (1, 2, 3, 4))]
    assert trace.q == 5
    assert enumeration_bound(trace).star_patterns == 21


def test_star_too_small_for_variant_c():
    trace = decompose(star(5), "C")
    assert trace.stars == []
    assert trace.independent_set == {1, 2, 3, 4}
    assert trace.leftover == {0}


def test_cycle_goes_straight_to_phase_three():
    trace = decompose(cycle(7), "A")
    assert trace.independent_set == {0, 2, 4}
    assert (trace.r, trace.t) == (3, 4)
    assert enumeration_bound(trace).predicted == 16


def test_path_alternation_starts_at_an_end():
    trace = decompose(path(5))
    assert trace.independent_set == {0, 2, 4}
    assert trace.leftover == {1, 3}


def test_empty_graph():
    trace = decompose(Graph(0))
    assert (trace.p, trace.q, trace.r, trace.t) == (0, 0, 0, 0)
    assert enumeration_bound(trace).predicted == 1


def test_unknown_variant():
    with pytest.raises(PreconditionError):
        decompose(path(3), "D")


def test_has_triangle():
    assert has_triangle(complete(3).neighbor_masks, 0b111)
    assert not has_triangle(complete(3).neighbor_masks, 0b011)
    assert not has_triangle(cycle(6).neighbor_masks, 0b111111)


def _is_major_block(g, block, residual) -> bool:
    """True when ``block`` is some ``v`` plus a whole component of ``N(v)`` inside ``residual``."""
    for v in block:
        rest = block - {v}
        nbhd = set(g.neighbors(v)) & residual
        if len(rest) < 2 or not rest <= nbhd:
            continue
        start = min(rest)
        seen, stack = {start}, [start]
        while stack:
            for w in g.neighbors(stack.pop()):
                if w in nbhd and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen == rest:
            return True
    return False


@pytest.mark.parametrize("variant", ["A", "B", "C"])
def test_decomposition_partitions_the_vertices(variant):
    blocks_seen = 0
    for seed in range(30):
        g = disjoint_union(random_gnp(9, 0.3, seed=seed), star(6))
        trace = decompose(g, variant)
        pieces = [set(b) for b in trace.blocks]
        pieces += [{c, *leaves} for c, leaves in trace.stars]
        pieces += [set(trace.independent_set), set(trace.leftover)]
        assert sum(len(p) for p in pieces) == g.vertex_count
        assert set().union(*pieces) == set(g.vertices())
        assert is_independent(g, trace.independent_set)
        assert trace.diagnostics == []
        residual = set(g.vertices())
        for block in pieces[:len(trace.blocks)]:
            assert len(block) >= 3
            assert _is_major_block(g, block, residual), (seed, sorted(block))
            residual -= block
            blocks_seen += 1
        for center, leaves in trace.stars:
            assert all(g.has_edge(center, leaf) for leaf in leaves)
        rows = g.neighbor_masks
        rest = mask_of(trace.independent_set | trace.leftover)
        k = {"A": 3, "B": 4, "C": 5}[variant]
        assert all((rows[v] & rest).bit_count() < k for v in trace.independent_set | trace.leftover)
        assert trace.p + trace.q + trace.r + trace.t == g.vertex_count
    assert blocks_seen > 0


def test_trace_to_dict():
    data = decompose(edgeless(3)).to_dict()
    assert data["independent_set"] == [0, 1, 2]
    assert data["leftover"] == []
    assert data["variant"] == "A"
