"""
Partial colorings and propagation

A P3-convex set is a black/white coloring in which no white vertex has two black
neighbors. The exponential algorithms fix the colors of part of the graph, extend
them with two forcing rules and count the remaining completions as independent
sets of an auxiliary graph.

Rules:
    R1  A white vertex with a black neighbor turns all its uncolored neighbors white.
    R2  An uncolored vertex with two black neighbors turns black.

A coloring is invalid when a white vertex ends with two black neighbors, or when one
vertex is forced both ways in the same round.
"""

# Standard library imports
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

# Project-specific modules
from p3count.errors import PreconditionError
from p3count.graph import Graph, VertexSet, mask_of, members


class Color(str, Enum):
    BLACK = "B"
    WHITE = "W"
    UNCOLORED = "U"


@dataclass(frozen=True)
class PartialColoring:
    """Black, white and uncolored vertices of a graph on ``vertex_count`` vertices, as bitsets."""

    vertex_count: int
    black: int = 0
    white: int = 0

    def __post_init__(self):
        if self.black & self.white:
            raise PreconditionError("a vertex cannot be both black and white")
        if (self.black | self.white) >> self.vertex_count:
            raise PreconditionError("coloring mentions a vertex outside the graph")

    @classmethod
    def uncolored(cls, vertex_count: int) -> "PartialColoring":
        return cls(vertex_count)

    @classmethod
    def from_sets(cls, vertex_count: int, black=(), white=()) -> "PartialColoring":
        return cls(vertex_count, mask_of(black), mask_of(white))

    @property
    def full(self) -> int:
        return (1 << self.vertex_count) - 1

    @property
    def uncolored_mask(self) -> int:
        return self.full & ~(self.black | self.white)

    def state(self, v: int) -> Color:
        if (self.black >> v) & 1:
            return Color.BLACK
        if (self.white >> v) & 1:
            return Color.WHITE
        return Color.UNCOLORED

    def with_color(self, v: int, color: Color) -> "PartialColoring":
        bit = 1 << v
        black, white = self.black & ~bit, self.white & ~bit
        if color is Color.BLACK:
            black |= bit
        elif color is Color.WHITE:
            white |= bit
        return PartialColoring(self.vertex_count, black, white)

    def states(self) -> list[Color]:
        return [self.state(v) for v in range(self.vertex_count)]

    def __str__(self) -> str:
        return "".join(c.value for c in self.states())


@dataclass(frozen=True)
class PropagationResult:
    """Fixpoint of R1 and R2.

    Attributes:
        coloring (PartialColoring): The extended coloring.
        forced (VertexSet): Vertices uncolored before propagation and colored after it.
        valid (bool): False when the starting coloring has no convex completion.
    """

    coloring: PartialColoring
    forced: VertexSet
    valid: bool


def subsets(mask: int) -> Iterator[int]:
    """Yields every submask of ``mask``, starting with ``mask`` itself and ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def overloaded_white(rows, black: int, white: int) -> bool:
    """True if some vertex of ``white`` has two or more neighbors in ``black``."""
    w = white
    while w:
        low = w & -w
        hit = rows[low.bit_length() - 1] & black
        if hit & (hit - 1):
            return True
        w ^= low
    return False


def _r2_targets(rows, black: int, free: int) -> int:
    targets = 0
    f = free
    while f:
        low = f & -f
        hit = rows[low.bit_length() - 1] & black
        if hit & (hit - 1):
            targets |= low
        f ^= low
    return targets


def _r1_targets(rows, black: int, white: int, free: int) -> int:
    targets = 0
    w = white
    while w:
        low = w & -w
        row = rows[low.bit_length() - 1]
        if row & black:
            targets |= row & free
        w ^= low
    return targets


def propagate_masks(rows, black: int, white: int, free: int) -> tuple[int, int, bool]:
    """Synchronous R1/R2 rounds on bitsets.

    Returns:
        tuple[int, int, bool]: Final black set, final white set and validity.
    """
    if overloaded_white(rows, black, white):
        return black, white, False
    while True:
        r2 = _r2_targets(rows, black, free)
        r1 = _r1_targets(rows, black, white, free)
        if r1 & r2:
            return black | r2, white | (r1 & ~r2), False
        if not r1 | r2:
            break
        black |= r2
        white |= r1
        free &= ~(r1 | r2)
        if overloaded_white(rows, black, white):
            return black, white, False
    return black, white, True


def _propagate_randomly(rows, black: int, white: int, free: int, rng: random.Random) -> tuple[int, int, bool]:
    # one firing per step, chosen uniformly among all applicable firings
    while True:
        r2 = _r2_targets(rows, black, free)
        r1 = _r1_targets(rows, black, white, free)
        firings = [(v, Color.BLACK) for v in members(r2)] + [(v, Color.WHITE) for v in members(r1)]
        if not firings:
            break
        v, color = rng.choice(firings)
        if color is Color.BLACK:
            black |= 1 << v
        else:
            white |= 1 << v
        free &= ~(1 << v)
    return black, white, not overloaded_white(rows, black, white)


def propagate(g: Graph, pi: PartialColoring, rng: random.Random = None) -> PropagationResult:
    """Extends ``pi`` to the least fixpoint of R1 and R2.

    Args:
        g (Graph): The graph.
        pi (PartialColoring): Starting coloring.
        rng (random.Random, optional): When given, rules fire one vertex at a time in random
            order instead of in synchronous rounds. Valid results agree with the default.

    Returns:
        PropagationResult: The fixpoint, the forced vertices and validity.
    """
    if pi.vertex_count != g.vertex_count:
        raise PreconditionError("coloring and graph have different vertex counts")
    rows = g.transient_masks()
    free = pi.uncolored_mask
    if rng is None:
        black, white, valid = propagate_masks(rows, pi.black, pi.white, free)
    else:
        black, white, valid = _propagate_randomly(rows, pi.black, pi.white, free, rng)
    forced = free & (black | white)
    return PropagationResult(
        coloring=PartialColoring(g.vertex_count, black, white),
        forced=VertexSet(members(forced)),
        valid=valid,
    )


def aux_rows(rows, white: int, remaining: int) -> dict[int, int]:
    """Adjacency of the auxiliary graph on ``remaining``: two vertices are adjacent when they
    share a white neighbor."""
    adjacency = {}
    r = remaining
    while r:
        low = r & -r
        x = low.bit_length() - 1
        joined = 0
        w = rows[x] & white
        while w:
            wl = w & -w
            joined |= rows[wl.bit_length() - 1]
            w ^= wl
        adjacency[x] = joined & remaining & ~low
        r ^= low
    return adjacency


def build_aux_graph(g: Graph, pr: PropagationResult, remaining) -> Graph:
    """Builds the auxiliary graph on ``remaining`` (relabelled in ascending order).

    Raises:
        PreconditionError: If ``pr`` is invalid, or ``remaining`` is not an independent set
            of uncolored vertices.
    """
    if not pr.valid:
        raise PreconditionError("auxiliary graph needs a valid propagation result")
    rows = g.transient_masks()
    keep = sorted(set(remaining))
    remaining_mask = mask_of(keep)
    if remaining_mask & ~pr.coloring.uncolored_mask:
        raise PreconditionError("auxiliary graph vertices must be uncolored")
    if any(rows[x] & remaining_mask for x in keep):
        raise PreconditionError("auxiliary graph vertices must be independent in the graph")

    index = {x: i for i, x in enumerate(keep)}
    adjacency = aux_rows(rows, pr.coloring.white, remaining_mask)
    edges = [(index[x], index[y]) for x in keep for y in members(adjacency[x]) if x < y]
    return Graph(len(keep), edges)


def completion_count(rows, black: int, white: int, free: int, noi) -> tuple[int, int]:
    """Number of convex completions of a coloring whose uncolored part ``free`` is independent.

    Args:
        rows: Neighbor bitsets of the graph.
        black (int): Colored black vertices.
        white (int): Colored white vertices.
        free (int): Uncolored vertices.
        noi (callable): ``noi(adjacency, vertices)`` counting independent sets on bitsets.

    Returns:
        tuple[int, int]: The count (0 if propagation fails) and the auxiliary graph size.
    """
    black, white, valid = propagate_masks(rows, black, white, free)
    if not valid:
        return 0, 0
    remaining = free & ~(black | white)
    if not remaining:
        return 1, 0
    return noi(aux_rows(rows, white, remaining), remaining), remaining.bit_count()
