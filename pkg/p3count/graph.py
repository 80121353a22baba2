"""
Graph

Immutable simple undirected graph on the dense vertex set ``0 .. n-1``, plus the
edge-list text format and the P3-convexity membership test.

Overview:
    A Graph keeps two views of its adjacency. The sorted neighbor lists exist for
    every graph. The neighbor bitsets (one Python int per vertex) are kept only when
    the graph has at most ``Graph.MASK_CAP`` vertices; operations that enumerate
    vertex subsets refuse to run beyond that size.

Edge-list format:
    # comment lines start with '#'
    n m
    u v        (m lines, 0 <= u, v < n)

    Parallel edges collapse silently; self-loops are rejected.

JSON format:
    {"n": 3, "edges": [[0, 1], [1, 2]]}   (edges sorted lexicographically, u < v)
"""

# Standard library imports
import json
from collections import deque
from typing import Iterable

# Project-specific modules
from p3count.constants import MASK_CAP
from p3count.errors import (
    CapExceededError, GraphConstructionError, GraphParseError, PreconditionError, VertexIndexError,
)

VertexSet = frozenset


def mask_of(vertices: Iterable[int]) -> int:
    """Returns the bitset with a bit set for every vertex in ``vertices``."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Returns the vertices of a bitset in ascending order."""
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


class Graph:
    """Finite simple undirected graph with vertices ``0 .. vertex_count-1``.

    Graphs are immutable: every operation that changes the structure returns a
    fresh Graph and leaves the input untouched, so instances are safe to share
    between workers.

    Attributes:
        MASK_CAP (int): Largest vertex count for which neighbor bitsets are kept.
    """

    MASK_CAP = MASK_CAP

    __slots__ = ("_n", "_adjacency", "_masks", "_edge_count")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        """Builds a graph from a vertex count and an iterable of edges.

        Args:
            vertex_count (int): Number of vertices, at least 0.
            edges (Iterable[tuple[int, int]]): Unordered vertex pairs. Duplicates collapse.

        Raises:
            GraphConstructionError: If the count is negative or an edge is a self-loop.
            VertexIndexError: If an edge names a vertex outside ``0 .. vertex_count-1``.
        """
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise GraphConstructionError(f"vertex count must be a nonnegative integer, got {vertex_count!r}")

        neighbor_sets = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexIndexError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise GraphConstructionError(f"self-loop at vertex {u}")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)

        self._n = vertex_count
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets)
        self._edge_count = sum(len(nbrs) for nbrs in neighbor_sets) // 2

        if vertex_count <= self.MASK_CAP:
            self._masks = tuple(mask_of(nbrs) for nbrs in self._adjacency)
        else:
            self._masks = None

    # --- Construction helpers ---

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(vertex_count, edges)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        """Parses the ``{"n": int, "edges": [[u, v], ...]}`` form.

        Raises:
            GraphParseError: If the document is not valid JSON or lacks the fields.
        """
        try:
            data = json.loads(text)
            n = data["n"]
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (ValueError, KeyError, TypeError) as ex:
            raise GraphParseError(f"invalid graph JSON: {ex}") from ex
        if not isinstance(n, int):
            raise GraphParseError("field 'n' must be an integer")
        try:
            return cls(n, edges)
        except (GraphConstructionError, VertexIndexError) as ex:
            raise GraphParseError(str(ex)) from ex

    # --- Basic queries ---

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise VertexIndexError(f"vertex {v!r} out of range for {self._n} vertices")

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Returns the sorted neighbor list of ``v``."""
        self._check_vertex(v)
        return self._adjacency[v]

    adjacency = neighbors

    @property
    def has_mask_view(self) -> bool:
        return self._masks is not None

    def neighbor_mask(self, v: int) -> int:
        """Returns the neighbor bitset of ``v``.

        Raises:
            CapExceededError: If the graph is larger than ``MASK_CAP``.
        """
        self._check_vertex(v)
        return self.neighbor_masks[v]

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        if self._masks is None:
            raise CapExceededError("bitset view", self.MASK_CAP, self._n)
        return self._masks

    def transient_masks(self) -> tuple[int, ...]:
        """Returns neighbor bitsets regardless of the cap (built on demand above it)."""
        if self._masks is not None:
            return self._masks
        return tuple(mask_of(nbrs) for nbrs in self._adjacency)

    def edges(self) -> list[tuple[int, int]]:
        """Returns every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in self._adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if self._masks is not None:
            return bool((self._masks[u] >> v) & 1)
        return v in self._adjacency[u]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def degree_sequence(self) -> list[int]:
        """Degrees sorted in nonincreasing order."""
        return sorted((len(nbrs) for nbrs in self._adjacency), reverse=True)

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self._adjacency), default=0)

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adjacency), default=0)

    # --- Structure ---

    def connected_components(self) -> list[list[int]]:
        """Returns the components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self._n
        components = []
        for start in range(self._n):
            if seen[start]:
                continue
            seen[start] = True
            component = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        component.append(w)
                        queue.append(w)
            components.append(sorted(component))
        return components

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def is_tree(self) -> bool:
        return self._n >= 1 and self._edge_count == self._n - 1 and self.is_connected()

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """Two-colours the graph by BFS.

        Returns:
            tuple[list[int], list[int]] | None: The two colour classes (the class of each
            component's smallest vertex goes first), or None if the graph has an odd cycle.
        """
        side = [-1] * self._n
        for start in range(self._n):
            if side[start] != -1:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self._adjacency[u]:
                    if side[w] == -1:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        first = [v for v in range(self._n) if side[v] == 0]
        second = [v for v in range(self._n) if side[v] == 1]
        return first, second

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def split_partition(self) -> tuple[list[int], list[int]] | None:
        """Recognizes split graphs from the degree sequence.

        With degrees ``d_1 >= ... >= d_n`` and ``m = max{i : d_i >= i-1}``, the graph is
        split iff ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``; the ``m`` vertices of
        highest degree then form the clique.

        Returns:
            tuple[list[int], list[int]] | None: ``(clique, independent)`` or None.
        """
        order = sorted(range(self._n), key=lambda v: (-len(self._adjacency[v]), v))
        degrees = [len(self._adjacency[v]) for v in order]
        m = 0
        for i, d in enumerate(degrees, start=1):
            if d >= i - 1:
                m = i
        if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
            return None
        return sorted(order[:m]), sorted(order[m:])

    def is_split(self) -> bool:
        return self.split_partition() is not None

    # --- Derived graphs ---

    def delete_edge(self, u: int, v: int) -> "Graph":
        """Returns ``G - uv``.

        Raises:
            PreconditionError: If ``uv`` is not an edge.
        """
        if not self.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
        drop = (min(u, v), max(u, v))
        return Graph(self._n, (e for e in self.edges() if e != drop))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Returns the subgraph induced by ``vertices`` relabelled densely.

        Returns:
            tuple[Graph, tuple[int, ...]]: The subgraph and the index map, where entry ``i``
            is the original vertex of new vertex ``i``.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        new_index = {v: i for i, v in enumerate(keep)}
        edges = [
            (new_index[u], new_index[w])
            for u in keep for w in self._adjacency[u]
            if u < w and w in new_index
        ]
        return Graph(len(keep), edges), tuple(keep)

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Returns ``G - X`` and its index map (see ``induced_subgraph``)."""
        drop = set(vertices)
        for v in drop:
            self._check_vertex(v)
        return self.induced_subgraph(v for v in range(self._n) if v not in drop)

    def complement(self) -> "Graph":
        return Graph(self._n, (
            (u, v) for u in range(self._n) for v in range(u + 1, self._n)
            if v not in self._adjacency[u]
        ))

    # --- Serialization ---

    def to_edge_list(self) -> str:
        """Serializes to the edge-list text format (no trailing newline)."""
        edges = self.edges()
        lines = [f"{self._n} {len(edges)}"]
        lines.extend(f"{u} {v}" for u, v in edges)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"n": self._n, "edges": [[u, v] for u, v in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # --- Dunder ---

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        return f"<Graph(n={self._n}, m={self._edge_count})>"


def parse_edge_list(text: str) -> Graph:
    """Parses the edge-list text format.

    Args:
        text (str): Header line ``"n m"`` followed by ``m`` lines ``"u v"``. Blank lines and
            lines starting with ``#`` are ignored.

    Returns:
        Graph: The parsed graph, duplicate edges collapsed.

    Raises:
        GraphParseError: On a malformed line, an index out of range, a self-loop, a negative
            count or an edge count that does not match the header. The message names the line.
    """
    header = None
    edges = []
    last_line = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = line_number
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", line_number)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {line!r}", line_number) from None

        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError(f"negative vertex or edge count in header {line!r}", line_number)
            header = (a, b)
            continue

        n, m = header
        if len(edges) == m:
            raise GraphParseError(f"more edge lines than the {m} announced", line_number)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"vertex index out of range [0, {n}) in {line!r}", line_number)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", line_number)
        edges.append((a, b))

    if header is None:
        raise GraphParseError("missing 'n m' header line", last_line or 1)
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"header announces {m} edges but {len(edges)} were given", last_line)
    return Graph(n, edges)


def _as_membership(g: Graph, s: Iterable[int]) -> list[bool]:
    inside = [False] * g.vertex_count
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.vertex_count:
            raise VertexIndexError(f"vertex {v!r} out of range for {g.vertex_count} vertices")
        inside[v] = True
    return inside


def is_p3_convex(g: Graph, s: Iterable[int]) -> bool:
    """Tests whether every vertex outside ``s`` has at most one neighbor in ``s``.

    Runs in O(|V| + |E|) by counting, for each vertex outside ``s``, its neighbors in ``s``.
    """
    inside = _as_membership(g, s)
    hits = [0] * g.vertex_count
    for u in range(g.vertex_count):
        if not inside[u]:
            continue
        for w in g.neighbors(u):
            if not inside[w]:
                hits[w] += 1
                if hits[w] >= 2:
                    return False
    return True


def is_p3_convex_reference(g: Graph, s: Iterable[int]) -> bool:
    """Definition-level check: every path ``x - z - y`` with ``x, y`` in ``s`` has ``z`` in ``s``.

    Cubic; kept as the independent reference for ``is_p3_convex``.
    """
    inside = _as_membership(g, s)
    n = g.vertex_count
    for z in range(n):
        if inside[z]:
            continue
        for x in range(n):
            for y in range(x + 1, n):
                if inside[x] and inside[y] and g.has_edge(x, z) and g.has_edge(z, y):
                    return False
    return True
