"""
Phase decomposition

Splits the vertex set into the pieces the structured counter enumerates:

    Phase 1  major blocks: a vertex v plus a nontrivial connected component of the
             residual neighborhood of v, largest first. Afterwards the residual is
             triangle-free.
    Phase 2  stars K_{1,k} (k = 3, 4, 5 for variants A, B, C) around a vertex of
             maximum residual degree, until the residual has max degree below k.
    Phase 3  an independent set I of the residual (maximum on paths and cycles when the
             residual has max degree at most 2, greedy otherwise); the rest is leftover.

A convex set meets a major block M in nothing, one vertex or all of M, so M has
|M| + 2 local patterns. A star K_{1,k} has 12, 21 or 38 (k = 3, 4, 5).
"""

# Standard library imports
import logging
from dataclasses import dataclass, field

# Project-specific modules
from p3count.constants import STAR_PATTERN_COUNTS, VARIANT_STAR_LEAVES, VARIANTS
from p3count.errors import PreconditionError
from p3count.exact.independent_sets import greedy_independent_mask
from p3count.graph import Graph, VertexSet, mask_of, members

log = logging.getLogger(__name__)


@dataclass
class DecompositionTrace:
    """Record of one decomposition.

    Attributes:
        variant (str): ``"A"``, ``"B"`` or ``"C"``.
        blocks (list[VertexSet]): Major blocks in extraction order.
        stars (list[tuple[int, tuple[int, ...]]]): ``(center, leaves)`` in extraction order.
        independent_set (VertexSet): I.
        leftover (VertexSet): Phase-3 residual vertices outside I.
        diagnostics (list[str]): Messages about failed structural checks.
    """

    variant: str
    blocks: list = field(default_factory=list)
    stars: list = field(default_factory=list)
    independent_set: VertexSet = VertexSet()
    leftover: VertexSet = VertexSet()
    diagnostics: list = field(default_factory=list)

    @property
    def p(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def q(self) -> int:
        return sum(1 + len(leaves) for _, leaves in self.stars)

    @property
    def r(self) -> int:
        return len(self.independent_set)

    @property
    def t(self) -> int:
        return len(self.leftover)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "blocks": [sorted(block) for block in self.blocks],
            "stars": [[center, list(leaves)] for center, leaves in self.stars],
            "independent_set": sorted(self.independent_set),
            "leftover": sorted(self.leftover),
            "p": self.p, "q": self.q, "r": self.r, "t": self.t,
            "diagnostics": list(self.diagnostics),
        }


@dataclass(frozen=True)
class EnumerationBound:
    """Exact number of composite colorings a trace leads to.

    Attributes:
        block_patterns (int): Product of ``|M| + 2`` over major blocks.
        star_patterns (int): Product of the star pattern counts.
        free_patterns (int): ``2^t``.
        block_bound_holds (bool): ``block_patterns <= 5^(p/3)``, compared as
            ``block_patterns^3 <= 5^p``.
    """

    block_patterns: int
    star_patterns: int
    free_patterns: int
    block_bound_holds: bool

    @property
    def predicted(self) -> int:
        return self.block_patterns * self.star_patterns * self.free_patterns


def _neighborhood_components(rows, v: int, residual: int) -> list[int]:
    """Components of the residual neighborhood of ``v``, ordered by smallest vertex."""
    nbhd = rows[v] & residual
    comps = []
    rest = nbhd
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = rows[low.bit_length() - 1] & nbhd & ~seen
            seen |= fresh
            frontier |= fresh
        comps.append(seen)
        rest &= ~seen
    return comps


def _largest_block(rows, residual: int) -> int:
    best_size, best_block = 0, 0
    for v in members(residual):
        for comp in _neighborhood_components(rows, v, residual):
            size = comp.bit_count()
            if size >= 2 and size > best_size:
                best_size, best_block = size, comp | (1 << v)
    return best_block


def has_triangle(rows, residual: int) -> bool:
    for u in members(residual):
        for w in members(rows[u] & residual):
            if w > u and rows[u] & rows[w] & residual:
                return True
    return False


def _walk(rows, comp: int, start: int) -> list[int]:
    """Vertices of a path or cycle component in walking order from ``start``."""
    order = [start]
    seen = 1 << start
    cur = start
    while True:
        nxt = rows[cur] & comp & ~seen
        if not nxt:
            return order
        cur = (nxt & -nxt).bit_length() - 1
        seen |= 1 << cur
        order.append(cur)


def _max_independent_low_degree(rows, residual: int) -> int:
    """Maximum independent set of a residual with max degree at most 2, by alternation."""
    chosen = 0
    rest = residual
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = rows[low.bit_length() - 1] & residual & ~seen
            seen |= fresh
            frontier |= fresh
        comp = seen
        rest &= ~comp
        vertices = members(comp)
        endpoints = [v for v in vertices if (rows[v] & comp).bit_count() <= 1]
        if endpoints:
            order = _walk(rows, comp, endpoints[0])
            picks = [x for i, x in enumerate(order) if i % 2 == 0]
        else:
            order = _walk(rows, comp, vertices[0])
            picks = [x for i, x in enumerate(order) if i % 2 == 0 and i != len(order) - 1]
        chosen |= mask_of(picks)
    return chosen


def decompose(g: Graph, variant: str = "A") -> DecompositionTrace:
    """Runs the three phases on ``g``.

    Ties break by lowest vertex index throughout: the Phase-1 vertex and component, the
    Phase-2 center and its leaves, the Phase-3 starting vertices.

    Raises:
        PreconditionError: On an unknown variant.
    """
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}")
    trace = DecompositionTrace(variant=variant)
    if g.vertex_count == 0:
        return trace
    rows = g.transient_masks()
    residual = (1 << g.vertex_count) - 1

    # Phase 1
    while True:
        block = _largest_block(rows, residual)
        if not block:
            break
        trace.blocks.append(VertexSet(members(block)))
        residual &= ~block
    if has_triangle(rows, residual):
        message = "residual after major-block extraction contains a triangle"
        log.warning(message)
        trace.diagnostics.append(message)

    # Phase 2
    k = VARIANT_STAR_LEAVES[variant]
    while residual:
        center = max(members(residual), key=lambda v: ((rows[v] & residual).bit_count(), -v))
        nbrs = members(rows[center] & residual)
        if len(nbrs) < k:
            break
        leaves = tuple(nbrs[:k])
        trace.stars.append((center, leaves))
        residual &= ~(mask_of(leaves) | (1 << center))

    # Phase 3
    max_degree = max(((rows[v] & residual).bit_count() for v in members(residual)), default=0)
    if max_degree <= 2:
        chosen = _max_independent_low_degree(rows, residual)
    else:
        chosen = greedy_independent_mask(rows, residual)
    trace.independent_set = VertexSet(members(chosen))
    trace.leftover = VertexSet(members(residual & ~chosen))
    log.debug("decomposition %s of %r: p=%d q=%d r=%d t=%d",
              variant, g, trace.p, trace.q, trace.r, trace.t)
    return trace


def enumeration_bound(trace: DecompositionTrace) -> EnumerationBound:
    block_patterns = 1
    for block in trace.blocks:
        block_patterns *= len(block) + 2
    star_patterns = 1
    for _, leaves in trace.stars:
        star_patterns *= STAR_PATTERN_COUNTS[len(leaves)]
    return EnumerationBound(
        block_patterns=block_patterns,
        star_patterns=star_patterns,
        free_patterns=1 << trace.t,
        block_bound_holds=block_patterns ** 3 <= 5 ** trace.p,
    )
