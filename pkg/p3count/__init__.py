"""Initializes the p3count package.

This module exposes the primary interfaces for counting the P3-convex sets of a
graph and for checking the facts around them. It provides access to:

- Graph, parse_edge_list, is_p3_convex: Graph representation and the membership check.
- graph_from_spec: Generator mini-language (``path:6``, ``threshold:IUIU``, ...).
- noc_auto, count_graph: Exact counting with the fastest applicable method.
- noc_bruteforce, noc_tree, noc_threshold, noc_generic, noc_structured, noc_kl: The individual counters.
- build_split_reduction, verify_reduction_identity: The split-graph reduction.

Typical usage example:
    from p3count import graph_from_spec, noc_auto
    noc_auto(graph_from_spec("path:6"))  # 37
"""

__version__ = "0.1.0"

from p3count.graph import Graph, is_p3_convex, parse_edge_list
from p3count.generators import graph_from_spec
from p3count.oracle import noc_bruteforce, noi_bruteforce
from p3count.tree_count import noc_tree
from p3count.threshold_count import noc_threshold, recognize_threshold
from p3count.exact import noc_generic, noc_kl, noc_structured, noi_branching
from p3count.core import CountResult, count_graph, noc_auto
from p3count.reduction_lab import build_split_reduction, verify_reduction_identity
