"""
Threshold counting

Recognizes threshold graphs by peeling and counts their P3-convex sets with a
closed form on the canonical split partition.

Recognition:
    Repeatedly remove a vertex that is isolated or universal in what remains (the
    lowest such index first). The graph is threshold iff this empties it; the removal
    order reversed is a creation sequence. When the peel gets stuck, the remainder
    has no isolated and no universal vertex and contains an induced P4, C4 or 2K2.

Counting, for a threshold graph with minimum degree at least 1 that is not a star,
with clique part K, independent part S and S1 the degree-1 vertices of S:

    noc(G) = (|S| + 1) + |K| + N_U + 2^|S1|,
    N_U    = 0 if min degree >= 2, else 2^|S1| - 1.

Degree-0 vertices each double the count and are stripped first.
"""

# Standard library imports
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from heapq import heappop, heappush
from itertools import combinations

# Project-specific modules
from p3count.constants import THRESHOLD_WITNESS_CAP
from p3count.errors import PreconditionError
from p3count.generators import CreationTag
from p3count.graph import Graph, VertexSet
from p3count.tree_count import noc_star_closed

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThresholdProfile:
    """Creation sequence and canonical split partition of a threshold graph.

    Attributes:
        creation_sequence (tuple[CreationTag, ...]): Tag of each creation step; the first
            step is the starting vertex and is tagged ISOLATED.
        creation_order (tuple[int, ...]): Original vertex added at each step, so vertex ``i``
            of ``threshold_from_sequence(creation_sequence)`` is ``creation_order[i]``.
        clique_part (VertexSet): K, a maximum clique.
        independent_part (VertexSet): S = V - K.
        s0 (VertexSet): Degree-0 vertices of S.
        s1 (VertexSet): Degree-1 vertices of S.
        n_u (int): The universal-vertex correction term.
        min_deg (int): Minimum degree once the degree-0 vertices are removed (0 if none remain).
    """

    creation_sequence: tuple
    creation_order: tuple
    clique_part: VertexSet
    independent_part: VertexSet
    s0: VertexSet
    s1: VertexSet
    n_u: int
    min_deg: int

    @property
    def sequence_text(self) -> str:
        return "".join(tag.value for tag in self.creation_sequence)


@dataclass(frozen=True)
class NotThreshold:
    """Verdict for a graph that is not threshold.

    Attributes:
        witness (tuple[int, ...] | None): Four vertices inducing P4, C4 or 2K2, when searched.
        kind (str | None): ``"P4"``, ``"C4"`` or ``"2K2"``.
    """

    witness: tuple | None = None
    kind: str | None = None


@dataclass(frozen=True)
class ThresholdBreakdown:
    """The three contributions of the closed form, by how much of K a convex set holds."""

    no_clique_vertex: int
    one_clique_vertex: int
    whole_clique: int
    isolated_factor: int = 1
    notes: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.isolated_factor * (self.no_clique_vertex + self.one_clique_vertex + self.whole_clique)


def _classify_four(g: Graph, quad: tuple) -> str | None:
    edges = [(a, b) for a, b in combinations(quad, 2) if g.has_edge(a, b)]
    degrees = sorted(sum(1 for e in edges if v in e) for v in quad)
    if len(edges) == 2 and degrees == [1, 1, 1, 1]:
        return "2K2"
    if len(edges) == 3 and degrees == [1, 1, 2, 2]:
        return "P4"
    if len(edges) == 4 and degrees == [2, 2, 2, 2]:
        return "C4"
    return None


def find_forbidden_witness(g: Graph, vertices=None) -> NotThreshold:
    """Searches four-vertex subsets for an induced P4, C4 or 2K2."""
    pool = sorted(vertices) if vertices is not None else list(g.vertices())
    for quad in combinations(pool, 4):
        kind = _classify_four(g, quad)
        if kind is not None:
            return NotThreshold(witness=quad, kind=kind)
    return NotThreshold()


def recognize_threshold(g: Graph, witness_cap: int = None) -> ThresholdProfile | NotThreshold:
    """Recognizes a threshold graph and builds its profile.

    Args:
        g (Graph): Any graph.
        witness_cap (int, optional): Largest graph for which a forbidden-subgraph witness is
            searched on failure. If None, uses ``THRESHOLD_WITNESS_CAP``.

    Returns:
        ThresholdProfile | NotThreshold: The profile, or the not-threshold verdict.
    """
    if witness_cap is None:
        witness_cap = THRESHOLD_WITNESS_CAP

    n = g.vertex_count
    alive = [True] * n
    degree = [g.degree(v) for v in range(n)]
    remaining = n
    peeled = []  # (vertex, tag), in removal order

    # one min-heap per degree; entries whose degree has since dropped are skipped lazily
    buckets = defaultdict(list)
    for v in range(n):
        buckets[degree[v]].append(v)

    def lowest(d: int) -> int | None:
        heap = buckets.get(d)
        while heap and (not alive[heap[0]] or degree[heap[0]] != d):
            heappop(heap)
        return heap[0] if heap else None

    while remaining > 0:
        candidates = [v for v in (lowest(0), lowest(remaining - 1)) if v is not None]
        if not candidates:
            stuck = [v for v in range(n) if alive[v]]
            if n <= witness_cap:
                return find_forbidden_witness(g, stuck)
            return NotThreshold()
        pick = min(candidates)
        tag = CreationTag.ISOLATED if degree[pick] == 0 else CreationTag.UNIVERSAL
        peeled.append((pick, tag))
        alive[pick] = False
        remaining -= 1
        for w in g.neighbors(pick):
            if alive[w]:
                degree[w] -= 1
                heappush(buckets[degree[w]], w)

    creation = list(reversed(peeled))
    if creation:
        creation[0] = (creation[0][0], CreationTag.ISOLATED)
    creation_order = tuple(v for v, _ in creation)
    creation_sequence = tuple(tag for _, tag in creation)

    degree_zero = {v for v in range(n) if g.degree(v) == 0}
    universal_steps = [i for i, tag in enumerate(creation_sequence) if tag is CreationTag.UNIVERSAL]
    clique = {creation_order[i] for i in universal_steps}
    if universal_steps:
        before_first = [creation_order[i] for i in range(universal_steps[0]) if creation_order[i] not in degree_zero]
        if before_first:
            clique.add(min(before_first))

    independent = set(range(n)) - clique
    s0 = degree_zero & independent
    s1 = {v for v in independent if g.degree(v) == 1}
    core_degrees = [g.degree(v) for v in range(n) if v not in degree_zero]
    min_deg = min(core_degrees, default=0)
    n_u = (1 << len(s1)) - 1 if min_deg == 1 else 0

    return ThresholdProfile(
        creation_sequence=creation_sequence,
        creation_order=creation_order,
        clique_part=VertexSet(clique),
        independent_part=VertexSet(independent),
        s0=VertexSet(s0),
        s1=VertexSet(s1),
        n_u=n_u,
        min_deg=min_deg,
    )


def is_threshold(g: Graph) -> bool:
    return isinstance(recognize_threshold(g, witness_cap=0), ThresholdProfile)


def threshold_case_breakdown(g: Graph, profile: ThresholdProfile = None) -> ThresholdBreakdown:
    """Evaluates the closed form case by case.

    Raises:
        PreconditionError: If ``g`` is not a threshold graph.
    """
    if profile is None:
        profile = recognize_threshold(g, witness_cap=0)
    if not isinstance(profile, ThresholdProfile):
        raise PreconditionError("graph is not a threshold graph; use the exponential-time counters")

    factor = 1 << len(profile.s0)
    core_size = g.vertex_count - len(profile.s0)
    core_edges = g.edge_count

    if core_size == 0:
        return ThresholdBreakdown(1, 0, 0, factor, ["edgeless"])
    if core_size == 1:
        return ThresholdBreakdown(1, 1, 0, factor, ["single vertex"])
    if core_edges == core_size - 1 and profile.min_deg == 1 and max(g.degree(v) for v in g.vertices()) == core_size - 1:
        # the core is the star K_{1, core_size - 1}
        return ThresholdBreakdown(noc_star_closed(core_size), 0, 0, factor, ["star"])

    k = len(profile.clique_part)
    s = len(profile.independent_part) - len(profile.s0)
    s1 = len(profile.s1)
    return ThresholdBreakdown(
        no_clique_vertex=s + 1,
        one_clique_vertex=k + profile.n_u,
        whole_clique=1 << s1,
        isolated_factor=factor,
    )


def noc_threshold(g: Graph) -> int:
    """Counts the P3-convex sets of a threshold graph in O((|V| + |E|) log |V|) time.

    Dispatch: degree-0 vertices are stripped and each doubles the count; an empty core
    contributes 1, a single vertex 2, a star core its closed form, and any other core the
    split-partition formula.

    Raises:
        PreconditionError: If ``g`` is not a threshold graph.
    """
    breakdown = threshold_case_breakdown(g)
    log.debug("threshold breakdown for %r: %s", g, breakdown)
    return breakdown.total
