"""
(k, l)-graphs

Counting for graphs whose vertex set splits into k independent sets A_1 .. A_k and
l cliques C_1 .. C_l. A convex set meets a clique in nothing, one vertex or all of it,
so each clique has |C| + 2 patterns. The largest A part becomes I; the other A parts
are colored freely.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from functools import reduce
from itertools import product
from operator import or_

# Project-specific modules
from p3count.constants import DEFAULT_ENUMERATION_CAP
from p3count.errors import CapExceededError, PreconditionError
from p3count.exact.coloring import subsets
from p3count.exact.generic import EnumerationResult
from p3count.exact.independent_sets import is_independent
from p3count.exact.structured import block_patterns
from p3count.graph import Graph, VertexSet, mask_of, members

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KLPartition:
    """Partition of the vertices into independent parts and clique parts."""

    independent_parts: tuple = ()
    clique_parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "independent_parts", tuple(VertexSet(p) for p in self.independent_parts))
        object.__setattr__(self, "clique_parts", tuple(VertexSet(p) for p in self.clique_parts))

    @property
    def k(self) -> int:
        return len(self.independent_parts)

    @property
    def l(self) -> int:
        return len(self.clique_parts)

    def validate(self, g: Graph) -> None:
        """Raises PreconditionError unless this is a valid partition of ``g``."""
        seen = set()
        for part in self.independent_parts + self.clique_parts:
            for v in part:
                if not isinstance(v, int) or not 0 <= v < g.vertex_count:
                    raise PreconditionError(f"partition mentions vertex {v!r} outside the graph")
                if v in seen:
                    raise PreconditionError(f"vertex {v} appears in two parts")
                seen.add(v)
        if len(seen) != g.vertex_count:
            missing = sorted(set(g.vertices()) - seen)
            raise PreconditionError(f"partition misses vertices {missing}")
        for part in self.independent_parts:
            if not is_independent(g, part):
                raise PreconditionError(f"part {sorted(part)} is not independent")
        for part in self.clique_parts:
            ordered = sorted(part)
            for i, u in enumerate(ordered):
                for w in ordered[i + 1:]:
                    if not g.has_edge(u, w):
                        raise PreconditionError(f"part {ordered} is not a clique")

    def to_text(self) -> str:
        """The ``--partition`` file format: one ``A ...`` or ``C ...`` line per part."""
        lines = [" ".join(["A"] + [str(v) for v in sorted(p)]) for p in self.independent_parts]
        lines += [" ".join(["C"] + [str(v) for v in sorted(p)]) for p in self.clique_parts]
        return "\n".join(lines)


def parse_partition(text: str) -> KLPartition:
    """Reads the ``--partition`` format. Blank lines and ``#`` comments are skipped.

    Raises:
        PreconditionError: On an unknown line tag, a non-integer vertex or an empty part.
    """
    independent, cliques = [], []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split()
        if tag.upper() not in ("A", "C"):
            raise PreconditionError(f"line {line_number}: expected 'A' or 'C', got {tag!r}")
        try:
            part = [int(x) for x in rest]
        except ValueError:
            raise PreconditionError(f"line {line_number}: vertices must be integers") from None
        if not part:
            raise PreconditionError(f"line {line_number}: empty {tag.upper()} part")
        if tag.upper() == "A":
            independent.append(part)
        else:
            cliques.append(part)
    return KLPartition(tuple(independent), tuple(cliques))


def enumerate_kl(g: Graph, part: KLPartition, cap: int = None) -> EnumerationResult:
    """Runs the clique-pattern scheme and returns the count with its instrumentation.

    Args:
        g (Graph): The graph.
        part (KLPartition): A valid partition of ``g``.
        cap (int, optional): Refuse runs with more than ``2^cap`` composite colorings.

    Raises:
        PreconditionError: If ``part`` is not a valid partition of ``g``.
        CapExceededError: If the enumeration is above the cap.
    """
    if cap is None:
        cap = DEFAULT_ENUMERATION_CAP
    part.validate(g)

    parts = sorted(part.independent_parts, key=len, reverse=True)
    independent = parts[0] if parts else VertexSet()
    open_side = mask_of(v for p in parts[1:] for v in p)

    choices = [block_patterns(clique) for clique in part.clique_parts if clique]
    predicted = 1 << open_side.bit_count()
    for c in choices:
        predicted *= len(c)
    if predicted > 1 << cap:
        raise CapExceededError("clique-pattern enumeration", cap, (predicted - 1).bit_length())
    choices.append(list(subsets(open_side)))

    rows = g.transient_masks()
    free = mask_of(independent)
    colored = ((1 << g.vertex_count) - 1) & ~free
    result = EnumerationResult(independent_size=len(independent))
    for combo in product(*choices):
        black = reduce(or_, combo, 0)
        result.add(rows, black, colored & ~black, free)
    log.debug("clique-pattern scheme on %r (k=%d, l=%d): %s", g, part.k, part.l, result.instrumentation())
    return result


def noc_kl(g: Graph, part: KLPartition, cap: int = None) -> int:
    """Counts the P3-convex sets of a (k, l)-graph given its partition."""
    return enumerate_kl(g, part, cap=cap).noc


def recognize_kl(g: Graph, k: int, l: int) -> KLPartition | None:
    """Finds a (k, l) partition for the small cases (1,0), (0,1), (2,0), (1,1) and (0,2).

    Returns:
        KLPartition | None: A partition, or None if ``g`` has none of that shape.

    Raises:
        PreconditionError: For any other (k, l).
    """
    n = g.vertex_count
    everything = list(g.vertices())
    match (k, l):
        case (1, 0):
            return KLPartition((everything,), ()) if g.edge_count == 0 else None
        case (0, 1):
            return KLPartition((), (everything,)) if g.edge_count == n * (n - 1) // 2 else None
        case (2, 0):
            sides = g.bipartition()
            return KLPartition(sides, ()) if sides is not None else None
        case (1, 1):
            split = g.split_partition()
            if split is None:
                return None
            clique, independent = split
            return KLPartition((independent,), (clique,))
        case (0, 2):
            sides = g.complement().bipartition()
            return KLPartition((), sides) if sides is not None else None
    raise PreconditionError(f"({k}, {l}) recognition is not supported; pass the partition explicitly")


def greedy_kl_partition(g: Graph) -> KLPartition:
    """Some valid partition of any graph.

    Cliques are grown greedily from each vertex in ascending order and kept when they
    reach three vertices; the remaining vertices are first-fit coloured into independent parts.
    """
    rows = g.transient_masks()
    residual = (1 << g.vertex_count) - 1
    cliques = []
    for v in g.vertices():
        if not (residual >> v) & 1:
            continue
        clique = 1 << v
        candidates = rows[v] & residual
        while candidates:
            w = (candidates & -candidates).bit_length() - 1
            clique |= 1 << w
            candidates &= rows[w]
        if clique.bit_count() >= 3:
            cliques.append(members(clique))
            residual &= ~clique

    classes = []
    class_masks = []
    for v in members(residual):
        for i, cls in enumerate(class_masks):
            if not rows[v] & cls:
                class_masks[i] |= 1 << v
                classes[i].append(v)
                break
        else:
            class_masks.append(1 << v)
            classes.append([v])
    return KLPartition(tuple(classes), tuple(cliques))
