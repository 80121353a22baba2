"""
Tree counting

Linear-time noc for trees by a three-state dynamic program over a rooted tree,
plus the closed form for stars and the linear recurrence for paths.

States of a vertex in a convex set:
    B   black (in the set)
    W   white, parent not black
    G   white, parent black

A black vertex allows each child to be B or G. A white vertex whose parent is black
(G) already has one black neighbor, so all its children are white (W). A white
vertex with no black parent (W) may have at most one black child.
"""

# Standard library imports
from collections import deque
from dataclasses import dataclass
from math import prod

# Project-specific modules
from p3count.errors import PreconditionError
from p3count.graph import Graph


@dataclass(frozen=True)
class TriCounts:
    """Convex-set counts of a rooted subtree by the colour state of its root."""

    b: int
    w: int
    g: int

    @property
    def total(self) -> int:
        """Root colourings available when the root has no parent: B or W."""
        return self.b + self.w


@dataclass(frozen=True)
class RootedTree:
    """A tree oriented away from ``root``.

    Attributes:
        root (int): The root vertex.
        parent (tuple[int | None, ...]): Parent of each vertex; None for the root.
        children (tuple[tuple[int, ...], ...]): Children of each vertex, ascending.
        order (tuple[int, ...]): BFS order from the root; reversed, it is a valid post-order.
    """

    root: int
    parent: tuple
    children: tuple
    order: tuple

    @property
    def vertex_count(self) -> int:
        return len(self.parent)


LEAF = TriCounts(1, 1, 1)


def root_tree(g: Graph, root: int = 0) -> RootedTree:
    """Orients the tree ``g`` away from ``root`` by BFS.

    Raises:
        PreconditionError: If ``g`` is not a tree.
        VertexIndexError: If ``root`` is not a vertex.
    """
    if not g.is_tree():
        raise PreconditionError(f"graph is not a tree (n={g.vertex_count}, m={g.edge_count})")
    g.neighbors(root)

    n = g.vertex_count
    parent = [None] * n
    children = [[] for _ in range(n)]
    seen = [False] * n
    seen[root] = True
    order = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                children[u].append(w)
                queue.append(w)
    return RootedTree(
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        order=tuple(order),
    )


def combine_children(kids: list[TriCounts]) -> TriCounts:
    """Combines the children's counts into the counts of their parent.

    The W case sums ``b_i * prod_{j != i} w_j`` with prefix and suffix products
    instead of dividing the full product by ``w_i``.
    """
    if not kids:
        return LEAF
    b = prod(kid.g + kid.b for kid in kids)
    g = prod(kid.w for kid in kids)

    k = len(kids)
    prefix = [1] * (k + 1)
    for i, kid in enumerate(kids):
        prefix[i + 1] = prefix[i] * kid.w
    suffix = [1] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] * kids[i].w
    one_black = sum(kids[i].b * prefix[i] * suffix[i + 1] for i in range(k))
    return TriCounts(b=b, w=g + one_black, g=g)


def subtree_counts(t: RootedTree) -> list[TriCounts]:
    """TriCounts of every vertex's subtree, computed bottom-up without recursion."""
    counts = [None] * t.vertex_count
    for v in reversed(t.order):
        counts[v] = combine_children([counts[c] for c in t.children[v]])
    return counts


def noc_rooted(t: RootedTree) -> TriCounts:
    """TriCounts of the whole rooted tree."""
    return subtree_counts(t)[t.root]


def noc_tree(g: Graph, root: int = 0) -> int:
    """Counts the P3-convex sets of a tree in O(|V| + |E|).

    Raises:
        PreconditionError: If ``g`` is not a tree.
    """
    return noc_rooted(root_tree(g, root)).total


def noc_star_closed(n: int) -> int:
    """``noc(K_{1,n-1}) = 2^(n-1) + n``."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"star size must be >= 1, got {n!r}")
    return (1 << (n - 1)) + n


def noc_path_recurrence(n: int) -> int:
    """``Z_n = 2 Z_{n-1} - Z_{n-2} + Z_{n-3}`` with ``Z_1, Z_2, Z_3 = 2, 4, 7``."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"path length must be >= 1, got {n!r}")
    z = [2, 4, 7]
    if n <= 3:
        return z[n - 1]
    a, b, c = z
    for _ in range(n - 3):
        a, b, c = b, c, 2 * c - b + a
    return c


def path_tricounts(n: int) -> TriCounts:
    """``(B_n, W_n, G_n)`` of a path rooted at an endpoint, from the first-order recurrences."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"path length must be >= 1, got {n!r}")
    b = w = g = 1
    for _ in range(n - 1):
        b, w, g = b + g, w + b, w
    return TriCounts(b=b, w=w, g=g)


def classify_tree(g: Graph) -> str:
    """Returns ``"star"``, ``"path"`` or ``"branching"`` for a tree.

    ``"branching"`` trees have a vertex of degree at least 3 and no universal vertex.
    Trees on up to three vertices are both stars and paths and report ``"star"``.
    """
    if not g.is_tree():
        raise PreconditionError("graph is not a tree")
    n = g.vertex_count
    if g.max_degree() == n - 1:
        return "star"
    if g.max_degree() <= 2:
        return "path"
    return "branching"


def leaf_decomposition(g: Graph, leaf: int) -> dict:
    """Splits ``noc(T)`` at a leaf ``r`` with neighbour ``r'`` and ``T' = T - r`` rooted at ``r'``.

    Returns:
        dict: ``noc``, the TriCounts fields of ``T'`` and ``rebuilt`` =
        ``2 * noc(T') + (g - w)``, which always equals ``noc``.

    Raises:
        PreconditionError: If ``g`` is not a tree on at least 3 vertices or ``leaf`` is not a leaf.
    """
    if not g.is_tree() or g.vertex_count < 3:
        raise PreconditionError("leaf decomposition needs a tree on at least 3 vertices")
    if g.degree(leaf) != 1:
        raise PreconditionError(f"vertex {leaf} is not a leaf")
    anchor = g.neighbors(leaf)[0]
    rest, index_map = g.delete_vertices([leaf])
    sub = noc_rooted(root_tree(rest, index_map.index(anchor)))
    return {
        "noc": noc_tree(g),
        "b": sub.b,
        "w": sub.w,
        "g": sub.g,
        "rebuilt": 2 * sub.total + (sub.g - sub.w),
    }
