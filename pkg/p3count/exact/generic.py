"""
Generic independent-set scheme

Fix an independent set I, try every black/white coloring of G - I, propagate, and
add up the completions:

    noc(G) = sum over valid colorings pi of G - I of noi(H_pi)

A coloring contributes exactly one set when propagation colors all of I.
"""

# Standard library imports
import logging
from dataclasses import dataclass

# Project-specific modules
from p3count.constants import DEFAULT_ENUMERATION_CAP
from p3count.errors import CapExceededError, PreconditionError
from p3count.exact.coloring import completion_count, overloaded_white, subsets
from p3count.exact.independent_sets import count_independent_masks, find_independent_set, is_independent
from p3count.graph import Graph, VertexSet, mask_of

log = logging.getLogger(__name__)


@dataclass
class EnumerationResult:
    """Count and instrumentation of one run of an exponential counter.

    Attributes:
        noc (int): The exact count.
        colorings_enumerated (int): Composite colorings generated.
        colorings_consistent (int): Colorings surviving the colored-colored check.
        colorings_valid (int): Colorings surviving propagation.
        aux_vertices_max (int): Largest auxiliary graph counted.
        independent_size (int): |I|.
    """

    noc: int = 0
    colorings_enumerated: int = 0
    colorings_consistent: int = 0
    colorings_valid: int = 0
    aux_vertices_max: int = 0
    independent_size: int = 0

    def add(self, rows, black: int, white: int, free: int) -> None:
        """Counts the completions of one composite coloring."""
        self.colorings_enumerated += 1
        if overloaded_white(rows, black, white):
            return
        self.colorings_consistent += 1
        count, aux_size = completion_count(rows, black, white, free, count_independent_masks)
        if count:
            self.colorings_valid += 1
            self.noc += count
            self.aux_vertices_max = max(self.aux_vertices_max, aux_size)

    def instrumentation(self) -> dict:
        return {
            "colorings_enumerated": self.colorings_enumerated,
            "colorings_consistent": self.colorings_consistent,
            "colorings_valid": self.colorings_valid,
            "aux_vertices_max": self.aux_vertices_max,
            "independent_size": self.independent_size,
        }


def enumerate_generic(g: Graph, i=None, cap: int = None) -> EnumerationResult:
    """Runs the generic scheme and returns the count with its instrumentation.

    Args:
        g (Graph): The graph.
        i (Iterable[int], optional): Independent set I. If None, the greedy strategy picks one.
        cap (int, optional): Largest ``|V| - |I|`` enumerated. If None, uses ``DEFAULT_ENUMERATION_CAP``.

    Raises:
        PreconditionError: If ``i`` is not independent.
        CapExceededError: If more than ``cap`` vertices would be enumerated.
    """
    if cap is None:
        cap = DEFAULT_ENUMERATION_CAP
    if i is None:
        i = find_independent_set(g)
    elif not is_independent(g, i):
        raise PreconditionError("I must be an independent set")
    i = VertexSet(i)

    enumerated = g.vertex_count - len(i)
    if enumerated > cap:
        raise CapExceededError("generic enumeration", cap, enumerated)

    rows = g.transient_masks()
    free = mask_of(i)
    colored = ((1 << g.vertex_count) - 1) & ~free
    result = EnumerationResult(independent_size=len(i))
    for black in subsets(colored):
        result.add(rows, black, colored & ~black, free)
    log.debug("generic scheme on %r with |I|=%d: %s", g, len(i), result.instrumentation())
    return result


def noc_generic(g: Graph, i=None, cap: int = None) -> int:
    """Counts the P3-convex sets of ``g`` with the generic independent-set scheme."""
    return enumerate_generic(g, i=i, cap=cap).noc
