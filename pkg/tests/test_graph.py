from itertools import combinations

import pytest

from p3count.errors import CapExceededError, GraphConstructionError, GraphParseError, PreconditionError, VertexIndexError
from p3count.generators import complete, cycle, disjoint_union, edgeless, paw, path, random_gnp, star
from p3count.graph import Graph, is_p3_convex, is_p3_convex_reference, mask_of, members, parse_edge_list


# --- Parsing ---

def test_parse_path():
    g = parse_edge_list("3 2\n0 1\n1 2")
    assert g.vertex_count == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_edgeless():
    g = parse_edge_list("2 0")
    assert g.vertex_count == 2
    assert g.edge_count == 0


def test_parse_skips_comments_and_blank_lines():
    g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n")
    assert g == complete(3)


def test_parse_collapses_duplicate_edges():
    g = parse_edge_list("3 2\n0 1\n1 0")
    assert g.edge_count == 1


@pytest.mark.parametrize("text, line", [
    ("3 1\n0 0", 2),               # self-loop
    ("2 1\n0 2", 2),               # index out of range
    ("2 1\n0 x", 2),               # not an integer
    ("-1 0", 1),                   # negative count
    ("3 1\n0 1 2", 2),             # three fields
    ("3 1\n0 1\n1 2", 3),          # more edges than announced
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line_number == line
    assert f"line {line}" in str(info.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphParseError):
        parse_edge_list("3 2\n0 1")


def test_parse_missing_header():
    with pytest.raises(GraphParseError):
        parse_edge_list("# nothing here\n")


def test_edge_list_and_json_round_trip():
    for g in (paw(), cycle(6), edgeless(3), random_gnp(9, 0.4, seed=3)):
        assert parse_edge_list(g.to_edge_list()) == g
        assert Graph.from_json(g.to_json()) == g


def test_json_edges_sorted():
    assert Graph(3, [(2, 1), (1, 0)]).to_dict() == {"n": 3, "edges": [[0, 1], [1, 2]]}


def test_from_json_rejects_garbage():
    with pytest.raises(GraphParseError):
        Graph.from_json('{"n": 2}')
    with pytest.raises(GraphParseError):
        Graph.from_json('{"n": 2, "edges": [[0, 0]]}')


# --- Construction ---

def test_constructor_errors():
    with pytest.raises(GraphConstructionError):
        Graph(-1)
    with pytest.raises(GraphConstructionError):
        Graph(2, [(1, 1)])
    with pytest.raises(VertexIndexError):
        Graph(2, [(0, 5)])


def test_adjacency_is_symmetric_and_matches_masks():
    g = random_gnp(12, 0.5, seed=11)
    for v in g.vertices():
        assert mask_of(g.neighbors(v)) == g.neighbor_mask(v)
        for w in g.neighbors(v):
            assert v in g.neighbors(w)


def test_mask_view_is_capped():
    g = Graph(Graph.MASK_CAP + 1, [(0, 1)])
    assert not g.has_mask_view
    assert g.has_edge(0, 1)
    with pytest.raises(CapExceededError):
        g.neighbor_mask(0)


def test_mask_helpers():
    assert mask_of([0, 3]) == 0b1001
    assert members(0b10110) == [1, 2, 4]


# --- Structure ---

def test_degree_queries(paw_graph):
    assert paw_graph.degree(0) == 3
    assert paw_graph.degree_sequence() == [3, 2, 2, 1]
    assert paw_graph.min_degree() == 1
    assert paw_graph.max_degree() == 3


def test_is_tree():
    assert path(7).is_tree()
    assert star(6).is_tree()
    assert not cycle(4).is_tree()
    assert not edgeless(2).is_tree()


def test_delete_edge_of_cycle_gives_path():
    g = cycle(4).delete_edge(0, 1)
    assert g.is_tree()
    assert g.degree_sequence() == path(4).degree_sequence()
    assert cycle(4).edge_count == 4


def test_delete_edge_requires_edge():
    with pytest.raises(PreconditionError):
        path(3).delete_edge(0, 2)


def test_components():
    g = disjoint_union(complete(2), edgeless(1))
    assert g.connected_components() == [[0, 1], [2]]
    assert not g.is_connected()


def test_induced_subgraph_and_index_map(paw_graph):
    sub, index = paw_graph.induced_subgraph([0, 1, 3])
    assert index == (0, 1, 3)
    assert sub.edges() == [(0, 1), (0, 2)]
    rest, index = paw_graph.delete_vertices([0])
    assert index == (1, 2, 3)
    assert rest.edges() == [(0, 1)]


def test_bipartition():
    assert cycle(5).bipartition() is None
    assert cycle(6).bipartition() == ([0, 2, 4], [1, 3, 5])
    assert star(4).is_bipartite()


def test_split_partition(paw_graph):
    assert paw_graph.split_partition() == ([0, 1, 2], [3])
    assert cycle(4).split_partition() is None
    assert not cycle(5).is_split()
    assert complete(4).is_split()


def test_complement():
    assert complete(3).complement() == edgeless(3)
    assert path(3).complement().edges() == [(0, 2)]


# --- Convexity ---

def test_convexity_examples(p3, paw_graph):
    assert not is_p3_convex(p3, {0, 2})
    assert is_p3_convex(p3, {0, 1})
    assert is_p3_convex(paw_graph, {0, 3})
    assert not is_p3_convex(paw_graph, {1, 2})


def test_empty_and_full_sets_are_convex():
    for g in (paw(), cycle(5), star(4), edgeless(3)):
        assert is_p3_convex(g, set())
        assert is_p3_convex(g, g.vertices())


def test_convexity_rejects_bad_vertices(p3):
    with pytest.raises(VertexIndexError):
        is_p3_convex(p3, {3})


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, (pairs[i] for i in range(len(pairs)) if (bits >> i) & 1))


def _agrees_with_reference(n):
    for g in _all_graphs(n):
        for s in range(1 << n):
            chosen = members(s)
            assert is_p3_convex(g, chosen) == is_p3_convex_reference(g, chosen), (g.to_dict(), chosen)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_convexity_matches_reference(n):
    _agrees_with_reference(n)


@pytest.mark.slow
def test_convexity_matches_reference_on_six_vertices():
    _agrees_with_reference(6)
