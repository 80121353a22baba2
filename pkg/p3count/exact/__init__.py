"""Exponential-time exact counters: propagation, auxiliary graphs, the generic
independent-set scheme, the phase decomposition and the (k, l) clique-pattern scheme."""

from p3count.exact.coloring import Color, PartialColoring, PropagationResult, build_aux_graph, propagate
from p3count.exact.decomposition import DecompositionTrace, EnumerationBound, decompose, enumeration_bound
from p3count.exact.generic import EnumerationResult, enumerate_generic, noc_generic
from p3count.exact.independent_sets import IndependentSetStrategy, find_independent_set, noi_branching
from p3count.exact.kl import KLPartition, greedy_kl_partition, noc_kl, parse_partition, recognize_kl
from p3count.exact.structured import StructuredResult, noc_structured
