"""Deterministic graph generators and the ``gen:name:params`` mini-language.

Every generator returns a fresh ``Graph``. Random generators take an explicit seed
and draw from their own ``random.Random`` so the same seed always gives the same graph.
"""

# Standard library imports
import heapq
import random
from enum import Enum
from typing import Iterable, Sequence

# Project-specific modules
from p3count.constants import GENERATOR_FAMILIES
from p3count.errors import GraphConstructionError
from p3count.graph import Graph


class CreationTag(str, Enum):
    """Step of a threshold graph's creation sequence."""

    ISOLATED = "I"
    UNIVERSAL = "U"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphConstructionError(message)


def edgeless(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 0, f"edgeless graph needs n >= 0, got {n!r}")
    return Graph(n)


def star(n: int) -> Graph:
    """Star ``K_{1,n-1}`` with center 0."""
    _require(isinstance(n, int) and n >= 1, f"star needs n >= 1, got {n!r}")
    return Graph(n, ((0, leaf) for leaf in range(1, n)))


def path(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 1, f"path needs n >= 1, got {n!r}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 3, f"cycle needs n >= 3, got {n!r}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 1, f"complete graph needs n >= 1, got {n!r}")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0 .. a-1`` and ``a .. a+b-1``."""
    _require(isinstance(a, int) and isinstance(b, int) and a >= 0 and b >= 0 and a + b >= 1,
             f"complete bipartite graph needs a, b >= 0 and a + b >= 1, got ({a!r}, {b!r})")
    return Graph(a + b, ((u, a + w) for u in range(a) for w in range(b)))


def paw() -> Graph:
    """Triangle ``0, 1, 2`` with the pendant vertex 3 attached to 0."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Places ``g2`` after ``g1``: vertex ``v`` of ``g2`` becomes ``v + |V(g1)|``."""
    shift = g1.vertex_count
    edges = g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph(g1.vertex_count + g2.vertex_count, edges)


def tree_from_prufer(sequence: Sequence[int], n: int | None = None) -> Graph:
    """Decodes a Prüfer sequence into the labeled tree on ``len(sequence) + 2`` vertices.

    Args:
        sequence (Sequence[int]): Entries in ``[0, n)``.
        n (int, optional): Vertex count; must equal ``len(sequence) + 2`` when given.

    Raises:
        GraphConstructionError: On a length mismatch or an entry out of range.
    """
    sequence = list(sequence)
    if n is None:
        n = len(sequence) + 2
    _require(n >= 2 and len(sequence) == n - 2,
             f"Prufer sequence for {n} vertices must have length {n - 2}, got {len(sequence)}")
    _require(all(isinstance(x, int) and 0 <= x < n for x in sequence),
             f"Prufer entries must lie in [0, {n})")

    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def threshold_from_sequence(tags: Iterable) -> Graph:
    """Builds a threshold graph from its creation sequence.

    Vertex ``i`` is added at step ``i``. The first tag stands for the starting vertex and
    is ignored; every later tag adds an isolated vertex (``I``) or a vertex adjacent to
    all earlier ones (``U``).

    Args:
        tags (Iterable): A string such as ``"IUIU"`` or a sequence of ``CreationTag``.

    Raises:
        GraphConstructionError: On an empty sequence or an unknown tag.
    """
    try:
        steps = [CreationTag(str(t.value if isinstance(t, CreationTag) else t).upper()) for t in tags]
    except ValueError as ex:
        raise GraphConstructionError(f"unknown creation tag: {ex}") from None
    _require(len(steps) >= 1, "creation sequence must not be empty")
    edges = [
        (earlier, i)
        for i, tag in enumerate(steps) if i > 0 and tag is CreationTag.UNIVERSAL
        for earlier in range(i)
    ]
    return Graph(len(steps), edges)


def random_gnp(n: int, p: float, seed: int | None = None) -> Graph:
    """Erdős–Rényi ``G(n, p)``: each pair, in lexicographic order, is an edge with probability ``p``."""
    _require(isinstance(n, int) and n >= 0, f"G(n, p) needs n >= 0, got {n!r}")
    _require(0.0 <= p <= 1.0, f"G(n, p) needs 0 <= p <= 1, got {p!r}")
    rng = random.Random(seed)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labeled tree, from a random Prüfer sequence."""
    _require(isinstance(n, int) and n >= 1, f"random tree needs n >= 1, got {n!r}")
    if n == 1:
        return Graph(1)
    rng = random.Random(seed)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)], n)


def graph_from_spec(spec: str, seed: int | None = None) -> Graph:
    """Builds a graph from the ``[gen:]name:params`` mini-language.

    Examples:
        ``gen:path:6``, ``star:5``, ``bipartite:3:5``, ``prufer:1,1``,
        ``threshold:IUIU``, ``gnp:8:0.5`` (with ``seed``), ``tree:10``, ``paw``.

    Raises:
        GraphConstructionError: On an unknown family or malformed parameters.
    """
    text = spec.strip()
    if text.startswith("gen:"):
        text = text[len("gen:"):]
    name, _, rest = text.partition(":")
    params = rest.split(":") if rest else []
    name = name.lower()
    if name not in GENERATOR_FAMILIES:
        known = ", ".join(sorted(GENERATOR_FAMILIES))
        raise GraphConstructionError(f"unknown generator family '{name}' (known: {known})")

    try:
        match name:
            case "path":
                return path(int(params[0]))
            case "cycle":
                return cycle(int(params[0]))
            case "star":
                return star(int(params[0]))
            case "complete":
                return complete(int(params[0]))
            case "edgeless":
                return edgeless(int(params[0]))
            case "bipartite":
                return complete_bipartite(int(params[0]), int(params[1]))
            case "prufer":
                entries = [int(x) for x in params[0].split(",") if x.strip()] if params else []
                return tree_from_prufer(entries)
            case "threshold":
                return threshold_from_sequence(params[0])
            case "gnp":
                return random_gnp(int(params[0]), float(params[1]), seed)
            case "tree":
                return random_tree(int(params[0]), seed)
            case "paw":
                return paw()
    except (IndexError, ValueError) as ex:
        if isinstance(ex, GraphConstructionError):
            raise
        usage = GENERATOR_FAMILIES[name]
        raise GraphConstructionError(f"malformed generator spec '{spec}' (usage: {usage})") from None
    raise GraphConstructionError(f"unknown generator family '{name}'")
