"""
Structured counting

Counts P3-convex sets by enumerating only the local patterns each piece of a
decomposition allows: |M| + 2 per major block, the cached convex sets of the star
shape per Phase-2 star, and all 2^t colorings of the leftover vertices. I stays
uncolored and is handled by the auxiliary graph.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from operator import or_

# Project-specific modules
from p3count.constants import DEFAULT_ENUMERATION_CAP, STAR_PATTERN_COUNTS
from p3count.errors import CapExceededError, InconsistencyError
from p3count.exact.coloring import subsets
from p3count.exact.decomposition import DecompositionTrace, EnumerationBound, decompose, enumeration_bound
from p3count.exact.generic import EnumerationResult
from p3count.generators import star
from p3count.graph import Graph, mask_of
from p3count.oracle import BruteForceOracle

log = logging.getLogger(__name__)


@dataclass
class StructuredResult(EnumerationResult):
    """EnumerationResult of a structured run, with its decomposition and predicted size."""

    variant: str = "A"
    trace: DecompositionTrace | None = None
    bound: EnumerationBound | None = None

    def instrumentation(self) -> dict:
        data = super().instrumentation()
        data["variant"] = self.variant
        if self.trace is not None:
            data.update(p=self.trace.p, q=self.trace.q, r=self.trace.r, t=self.trace.t)
        if self.bound is not None:
            data["colorings_predicted"] = self.bound.predicted
            data["block_bound_holds"] = self.bound.block_bound_holds
        return data


@lru_cache(maxsize=None)
def star_local_patterns(leaves: int) -> tuple[int, ...]:
    """Convex sets of ``K_{1,leaves}`` as local bitsets (bit 0 the center, bit i leaf i).

    Raises:
        InconsistencyError: If the number of patterns differs from the known count.
    """
    patterns = tuple(BruteForceOracle(star(leaves + 1)).convex_masks())
    expected = STAR_PATTERN_COUNTS.get(leaves)
    if expected is not None and len(patterns) != expected:
        raise InconsistencyError(f"K_1,{leaves} has {len(patterns)} convex sets, expected {expected}")
    return patterns


def block_patterns(block) -> list[int]:
    """All white, each single black vertex, all black."""
    vertices = sorted(block)
    patterns = [0] + [1 << v for v in vertices] + [mask_of(vertices)]
    return list(dict.fromkeys(patterns))


def star_patterns(center: int, leaves) -> list[int]:
    local = [center] + list(leaves)
    return [
        mask_of(local[i] for i in range(len(local)) if (pattern >> i) & 1)
        for pattern in star_local_patterns(len(leaves))
    ]


def noc_structured(g: Graph, variant: str = "A", cap: int = None,
                   trace: DecompositionTrace = None) -> StructuredResult:
    """Counts the P3-convex sets of ``g`` with the phase decomposition of ``variant``.

    ``.noc`` of the result is the count and ``.colorings_enumerated`` the number of
    composite colorings tried.

    Args:
        g (Graph): The graph.
        variant (str): ``"A"``, ``"B"`` or ``"C"``.
        cap (int, optional): Refuse runs that would enumerate more than ``2^cap`` composite
            colorings. If None, uses ``DEFAULT_ENUMERATION_CAP``.
        trace (DecompositionTrace, optional): A precomputed decomposition of ``g``.

    Raises:
        CapExceededError: If the predicted enumeration is above ``2^cap``.
    """
    if cap is None:
        cap = DEFAULT_ENUMERATION_CAP
    if trace is None:
        trace = decompose(g, variant)
    bound = enumeration_bound(trace)
    if bound.predicted > 1 << cap:
        raise CapExceededError("structured enumeration", cap, (bound.predicted - 1).bit_length())

    rows = g.transient_masks()
    free = mask_of(trace.independent_set)
    colored = ((1 << g.vertex_count) - 1) & ~free

    choices = [block_patterns(block) for block in trace.blocks]
    choices += [star_patterns(center, leaves) for center, leaves in trace.stars]
    choices.append(list(subsets(mask_of(trace.leftover))))

    result = StructuredResult(independent_size=len(trace.independent_set),
                              variant=variant, trace=trace, bound=bound)
    for combo in product(*choices):
        black = reduce(or_, combo, 0)
        result.add(rows, black, colored & ~black, free)
    log.debug("structured %s on %r: %s", variant, g, result.instrumentation())
    return result
