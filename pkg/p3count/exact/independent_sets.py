"""
Independent sets

Counting by branching on a maximum-degree vertex,
``noi(G) = noi(G - v) + noi(G - N[v])``, with the components of every subproblem
counted separately and paths, cycles, cliques and tiny components closed directly.
Also the strategies that pick the independent set I for the exponential algorithms.
"""

# Standard library imports
from enum import Enum

# Project-specific modules
from p3count.errors import PreconditionError
from p3count.graph import Graph, VertexSet, mask_of, members


class IndependentSetStrategy(str, Enum):
    GREEDY = "greedy"
    BIPARTITE = "bipartite"
    PROVIDED = "provided"


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def lucas(k: int) -> int:
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _component(adjacency, start: int, avail: int) -> int:
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        fresh = adjacency[low.bit_length() - 1] & avail & ~seen
        seen |= fresh
        frontier |= fresh
    return seen


def _count_small(adjacency, vertices: list[int]) -> int:
    total = 0
    for sub in range(1 << len(vertices)):
        chosen = mask_of(vertices[i] for i in range(len(vertices)) if (sub >> i) & 1)
        if all(not (adjacency[v] & chosen) for v in members(chosen)):
            total += 1
    return total


def _count_connected(adjacency, comp: int) -> int:
    vertices = members(comp)
    k = len(vertices)
    if k <= 3:
        return _count_small(adjacency, vertices)
    degrees = [(adjacency[v] & comp).bit_count() for v in vertices]
    if max(degrees) <= 2:
        edges = sum(degrees) // 2
        if edges == k - 1:
            return fibonacci(k + 2)
        return lucas(k)
    if min(degrees) == k - 1:
        return k + 1
    pivot = max(range(k), key=lambda i: (degrees[i], -vertices[i]))
    v = vertices[pivot]
    return count_independent_masks(adjacency, comp & ~(1 << v)) + \
        count_independent_masks(adjacency, comp & ~(1 << v) & ~adjacency[v])


def count_independent_masks(adjacency, avail: int) -> int:
    """Counts the independent sets of the subgraph induced by ``avail``.

    Args:
        adjacency: Neighbor bitset of every vertex in ``avail`` (a sequence or a dict).
        avail (int): Bitset of the vertices taking part.
    """
    total = 1
    rest = avail
    while rest:
        comp = _component(adjacency, rest & -rest, avail)
        total *= _count_connected(adjacency, comp)
        rest &= ~comp
    return total


def noi_branching(g: Graph) -> int:
    """Counts the independent sets of ``g``, the empty set included."""
    if g.vertex_count == 0:
        return 1
    return count_independent_masks(g.transient_masks(), (1 << g.vertex_count) - 1)


def greedy_independent_mask(rows, avail: int) -> int:
    """Repeatedly takes a minimum-degree vertex (lowest index on ties) and drops its
    closed neighborhood. The result has at least ``n / (max degree + 1)`` vertices."""
    chosen = 0
    while avail:
        best, best_degree = -1, None
        for v in members(avail):
            d = (rows[v] & avail).bit_count()
            if best_degree is None or d < best_degree:
                best, best_degree = v, d
        chosen |= 1 << best
        avail &= ~((1 << best) | rows[best])
    return chosen


def is_independent(g: Graph, vertices) -> bool:
    rows = g.transient_masks()
    chosen = mask_of(vertices)
    return all(not rows[v] & chosen for v in members(chosen))


def find_independent_set(g: Graph, strategy=IndependentSetStrategy.GREEDY, provided=None) -> VertexSet:
    """Picks an independent set of ``g``.

    Args:
        g (Graph): The graph.
        strategy (IndependentSetStrategy | str): ``greedy`` (minimum-degree rule),
            ``bipartite`` (larger colour class, at least n/2 vertices) or ``provided``.
        provided (Iterable[int], optional): The set to use with the ``provided`` strategy.

    Raises:
        PreconditionError: If ``bipartite`` is asked of a non-bipartite graph, or the provided
            set is missing or not independent.
    """
    strategy = IndependentSetStrategy(strategy)
    match strategy:
        case IndependentSetStrategy.GREEDY:
            if g.vertex_count == 0:
                return VertexSet()
            return VertexSet(members(greedy_independent_mask(g.transient_masks(), (1 << g.vertex_count) - 1)))
        case IndependentSetStrategy.BIPARTITE:
            sides = g.bipartition()
            if sides is None:
                raise PreconditionError("bipartite strategy needs a bipartite graph")
            first, second = sides
            return VertexSet(second if len(second) > len(first) else first)
        case IndependentSetStrategy.PROVIDED:
            if provided is None:
                raise PreconditionError("provided strategy needs a vertex set")
            chosen = VertexSet(provided)
            for v in chosen:
                g.neighbors(v)
            if not is_independent(g, chosen):
                raise PreconditionError("provided vertex set is not independent")
            return chosen
