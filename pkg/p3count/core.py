"""
P3-convex set counting

Counts the P3-convex sets of a finite simple graph exactly, choosing among the
brute-force oracle, the tree dynamic program, the threshold closed form and the
exponential-time schemes.

Overview:
    - ``noc_auto`` picks the fastest exact method for the graph at hand.
    - ``count_graph`` runs one named method and returns the count together with the
      method's instrumentation and the wall time, ready for the CLI or the results db.

A P3-convex set S is a vertex set such that every vertex outside S has at most one
neighbor inside S. noc(G) counts them, including the empty set and V(G).
"""

# Standard library imports
import logging
import time
from dataclasses import dataclass, field
from math import prod

# Project-specific modules
from p3count.constants import (
    ALGO_AUTO, ALGO_GENERIC, ALGO_KL, ALGO_ORACLE, ALGO_STRUCTURED_A, ALGO_STRUCTURED_B,
    ALGO_STRUCTURED_C, ALGO_THRESHOLD, ALGO_TREE, ALGORITHMS, DEFAULT_ENUMERATION_CAP, VARIANTS,
)
from p3count.errors import PreconditionError
from p3count.exact.decomposition import decompose, enumeration_bound
from p3count.exact.generic import enumerate_generic
from p3count.exact.kl import KLPartition, enumerate_kl, greedy_kl_partition
from p3count.exact.structured import noc_structured
from p3count.graph import Graph
from p3count.oracle import noc_bruteforce
from p3count.threshold_count import ThresholdProfile, recognize_threshold, threshold_case_breakdown
from p3count.tree_count import classify_tree, noc_tree

log = logging.getLogger(__name__)

STRUCTURED_ALGOS = {ALGO_STRUCTURED_A: "A", ALGO_STRUCTURED_B: "B", ALGO_STRUCTURED_C: "C"}


def jsonable(value):
    """Big integers become decimal strings; containers are converted recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if value.bit_length() > 53 else value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    return value


@dataclass
class CountResult:
    """Outcome of one count.

    Attributes:
        algo (str): The method asked for.
        noc (int): The exact count.
        n (int): Vertex count.
        m (int): Edge count.
        routes (list[str]): Methods that actually ran (one per component for ``auto``).
        instrumentation (dict): Method-specific counters.
        elapsed_ms (float): Wall time.
    """

    algo: str
    noc: int
    n: int
    m: int
    routes: list = field(default_factory=list)
    instrumentation: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "algo": self.algo,
            "noc": str(self.noc),
            "instrumentation": jsonable({"routes": list(self.routes), **self.instrumentation}),
        }


def best_structured_variant(g: Graph):
    """The variant whose decomposition predicts the fewest composite colorings (A, B, C on ties).

    Returns:
        tuple[str, DecompositionTrace]: The variant and its trace.
    """
    best = None
    for variant in VARIANTS:
        trace = decompose(g, variant)
        predicted = enumeration_bound(trace).predicted
        if best is None or predicted < best[0]:
            best = (predicted, variant, trace)
    return best[1], best[2]


def _route_connected(g: Graph, cap: int, routes: list) -> int:
    if g.is_tree():
        routes.append(ALGO_TREE)
        return noc_tree(g)
    profile = recognize_threshold(g, witness_cap=0)
    if isinstance(profile, ThresholdProfile):
        routes.append(ALGO_THRESHOLD)
        return threshold_case_breakdown(g, profile).total
    variant, trace = best_structured_variant(g)
    routes.append(f"structured-{variant}")
    return noc_structured(g, variant, cap=cap, trace=trace).noc


def _noc_auto(g: Graph, cap: int, routes: list) -> int:
    if g.vertex_count == 0:
        routes.append("empty")
        return 1
    components = g.connected_components()
    if len(components) == 1:
        return _route_connected(g, cap, routes)
    isolated = sum(1 for comp in components if len(comp) == 1)
    rest = [g.induced_subgraph(comp)[0] for comp in components if len(comp) > 1]
    if isolated:
        routes.append(f"isolated x{isolated}")
    return (1 << isolated) * prod(_route_connected(h, cap, routes) for h in rest)


def noc_auto(g: Graph, cap: int = None) -> int:
    """Counts the P3-convex sets of ``g`` exactly with the best available method.

    Dispatch: the empty graph has one convex set; a disconnected graph is the product
    over its components (each isolated vertex a factor 2); a tree uses the dynamic
    program; a threshold graph the closed form; anything else the structured variant
    predicting the fewest colorings.

    Args:
        g (Graph): Any graph.
        cap (int, optional): Enumeration cap handed to the structured counter.

    Raises:
        CapExceededError: If a component needs a structured run above the cap.
    """
    if cap is None:
        cap = DEFAULT_ENUMERATION_CAP
    return _noc_auto(g, cap, [])


def count_graph(g: Graph,
                algo: str = ALGO_AUTO,
                partition: KLPartition = None,
                cap: int = None,
                enum_cap: int = None,
                workers: int = None) -> CountResult:
    """Counts the P3-convex sets of ``g`` with the method named by ``algo``.

    Args:
        g (Graph): The graph.
        algo (str): One of ``ALGORITHMS``.
        partition (KLPartition, optional): Partition for ``kl``. If None, a greedy one is built.
        cap (int, optional): Oracle vertex cap.
        enum_cap (int, optional): Enumeration cap of the exponential methods.
        workers (int, optional): Worker processes for the oracle.

    Raises:
        PreconditionError: If ``algo`` is unknown or its precondition fails (not a tree,
            not threshold, invalid partition).
        CapExceededError: If a cap refuses the run.
    """
    if algo not in ALGORITHMS:
        raise PreconditionError(f"unknown algorithm '{algo}' (known: {', '.join(ALGORITHMS)})")
    if enum_cap is None:
        enum_cap = DEFAULT_ENUMERATION_CAP

    start = time.perf_counter()
    routes = []
    instrumentation = {}
    match algo:
        case "auto":
            noc = _noc_auto(g, enum_cap, routes)
        case "oracle":
            noc = noc_bruteforce(g, cap=cap, workers=workers)
            instrumentation["subsets_tested"] = 1 << g.vertex_count
            routes.append(ALGO_ORACLE)
        case "tree":
            noc = noc_tree(g)
            instrumentation["shape"] = classify_tree(g)
            routes.append(ALGO_TREE)
        case "threshold":
            profile = recognize_threshold(g)
            if not isinstance(profile, ThresholdProfile):
                witness = f" (induced {profile.kind} on {list(profile.witness)})" if profile.witness else ""
                raise PreconditionError(f"graph is not a threshold graph{witness}")
            breakdown = threshold_case_breakdown(g, profile)
            noc = breakdown.total
            instrumentation.update(
                creation_sequence=profile.sequence_text,
                clique_size=len(profile.clique_part),
                no_clique_vertex=breakdown.no_clique_vertex,
                one_clique_vertex=breakdown.one_clique_vertex,
                whole_clique=breakdown.whole_clique,
                isolated_factor=breakdown.isolated_factor,
            )
            routes.append(ALGO_THRESHOLD)
        case "generic":
            result = enumerate_generic(g, cap=enum_cap)
            noc = result.noc
            instrumentation.update(result.instrumentation())
            routes.append(ALGO_GENERIC)
        case "kl":
            if partition is None:
                partition = greedy_kl_partition(g)
            result = enumerate_kl(g, partition, cap=enum_cap)
            noc = result.noc
            instrumentation.update(result.instrumentation(), k=partition.k, l=partition.l)
            routes.append(ALGO_KL)
        case _:
            result = noc_structured(g, STRUCTURED_ALGOS[algo], cap=enum_cap)
            noc = result.noc
            instrumentation.update(result.instrumentation())
            routes.append(algo)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    log.debug("count %s on %r took %.2f ms", algo, g, elapsed_ms)
    return CountResult(
        algo=algo,
        noc=noc,
        n=g.vertex_count,
        m=g.edge_count,
        routes=routes,
        instrumentation=instrumentation,
        elapsed_ms=elapsed_ms,
    )
