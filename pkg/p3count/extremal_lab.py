"""
Extremal lab

Exhaustive and seeded-random checks of the extremal facts about noc at desk scale:
edge monotonicity, strictness against spanning trees, star maximality, the W - G gap
of branching trees, the path and star table, and the sweeps that cross-check the fast counters
against the oracle.

Every check returns a LabReport. Reports are deterministic given their arguments
and seed, serialize to JSON with ``to_dict`` and print as an aligned table with
``to_text``.
"""

# Standard library imports
import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, product

# Third-party libraries
import pandas as pd

# Project-specific modules
from p3count.constants import (
    CONNECTED_EXHAUSTION_MAX, GRAPH_ENUMERATION_RANGE, STAR_PATTERN_COUNTS, TABLE1_PATHS, TABLE1_STARS,
    TREE_ENUMERATION_RANGE, WG_GAP_RANGE,
)
from p3count.core import jsonable
from p3count.errors import PreconditionError
from p3count.exact.decomposition import decompose
from p3count.generators import path, random_gnp, random_tree, star, threshold_from_sequence, tree_from_prufer
from p3count.graph import Graph, is_p3_convex, mask_of
from p3count.oracle import BruteForceOracle, noc_bruteforce
from p3count.reduction_lab import verify_reduction_identity
from p3count.threshold_count import ThresholdProfile, noc_threshold, recognize_threshold
from p3count.tree_count import (
    classify_tree, leaf_decomposition, noc_path_recurrence, noc_rooted, noc_star_closed, noc_tree, root_tree,
    subtree_counts,
)

log = logging.getLogger(__name__)

VIOLATION_LIMIT = 20


@dataclass
class LabReport:
    """Outcome of one verification suite.

    Attributes:
        suite (str): Suite name.
        holds (bool): True iff no violation was found.
        checked (int): Number of instances checked.
        details (dict): Suite-specific values (maxima, counts, rows).
        violations (list[dict]): The first ``VIOLATION_LIMIT`` failing instances.
    """

    suite: str
    holds: bool = True
    checked: int = 0
    details: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    violation_count: int = 0

    def fail(self, **witness) -> None:
        self.holds = False
        self.violation_count += 1
        if len(self.violations) < VIOLATION_LIMIT:
            self.violations.append(witness)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "holds": self.holds,
            "checked": self.checked,
            "details": jsonable(self.details),
            "violation_count": self.violation_count,
            "violations": jsonable(self.violations),
        }

    def to_text(self) -> str:
        summary = pd.DataFrame(
            [("suite", self.suite), ("holds", self.holds), ("checked", self.checked),
             ("violations", self.violation_count)]
            + [(key, value) for key, value in self.details.items() if key != "rows"],
            columns=["field", "value"],
        )
        parts = [summary.to_string(index=False)]
        if "rows" in self.details:
            parts.append(pd.DataFrame(self.details["rows"]).to_string(index=False))
        if self.violations:
            parts.append(pd.DataFrame(jsonable(self.violations)).to_string(index=False))
        return "\n\n".join(parts)


def _require_range(name: str, n: int, bounds: tuple[int, int]) -> None:
    low, high = bounds
    if not isinstance(n, int) or not low <= n <= high:
        raise PreconditionError(f"{name} needs {low} <= n <= {high}, got {n!r}")


# --- Enumerators ---

def all_labeled_trees(n: int):
    """Yields the ``n^(n-2)`` labeled trees on ``n`` vertices via Prüfer sequences."""
    _require_range("labeled tree enumeration", n, TREE_ENUMERATION_RANGE)
    for sequence in product(range(n), repeat=n - 2):
        yield tree_from_prufer(sequence, n)


def all_labeled_graphs(n: int):
    """Yields the ``2^(n choose 2)`` labeled graphs on ``n`` vertices."""
    _require_range("labeled graph enumeration", n, GRAPH_ENUMERATION_RANGE)
    pairs = list(combinations(range(n), 2))
    for selection in range(1 << len(pairs)):
        yield Graph(n, (pairs[i] for i in range(len(pairs)) if (selection >> i) & 1))


def connected_labeled_graphs(n: int):
    for g in all_labeled_graphs(n):
        if g.is_connected():
            yield g


def spanning_trees(g: Graph):
    """Yields every spanning tree of a connected graph by filtering ``(n-1)``-edge subsets."""
    n = g.vertex_count
    for chosen in combinations(g.edges(), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v in chosen:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            yield Graph(n, chosen)


def _fingerprint(g: Graph) -> str:
    return ",".join(str(d) for d in g.degree_sequence())


# --- Checks on one graph ---

def verify_edge_monotonicity(g: Graph, cap: int = None) -> LabReport:
    """Checks ``noc(G - uv) >= noc(G)`` for every edge ``uv``."""
    report = LabReport("monotonicity")
    base = noc_bruteforce(g, cap=cap)
    report.details["noc"] = base
    for u, v in g.edges():
        reduced = noc_bruteforce(g.delete_edge(u, v), cap=cap)
        report.checked += 1
        if reduced < base:
            report.fail(graph=g.to_dict(), edge=[u, v], noc=base, noc_without_edge=reduced)
    return report


def verify_spanning_tree_strict(g: Graph, cap: int = None) -> LabReport:
    """Checks ``noc(G) < noc(T)`` for every spanning tree T.

    Raises:
        PreconditionError: Unless ``g`` is connected with ``|E| >= |V| >= 3``.
    """
    n, m = g.vertex_count, g.edge_count
    if n < 3 or m < n or not g.is_connected():
        raise PreconditionError(f"spanning-tree check needs a connected graph with |E| >= |V| >= 3 (n={n}, m={m})")
    report = LabReport("spanning-tree")
    base = noc_bruteforce(g, cap=cap)
    report.details["noc"] = base
    smallest = None
    for t in spanning_trees(g):
        value = noc_tree(t)
        report.checked += 1
        smallest = value if smallest is None else min(smallest, value)
        if not base < value:
            report.fail(graph=g.to_dict(), tree=t.to_dict(), noc=base, noc_tree=value)
    report.details["min_tree_noc"] = smallest
    return report


# --- Suites ---

def monotonicity_suite(samples: int = 1000, n_max: int = 10, seed: int = 0) -> LabReport:
    """Edge monotonicity on ``samples`` random (graph, edge) pairs with ``2 <= n <= n_max``."""
    rng = random.Random(seed)
    report = LabReport("monotonicity")
    report.details.update(samples=samples, n_max=n_max, seed=seed)
    while report.checked < samples:
        n = rng.randint(2, n_max)
        g = random_gnp(n, rng.choice((0.2, 0.4, 0.6, 0.8)), rng.randrange(1 << 30))
        edges = g.edges()
        if not edges:
            continue
        u, v = rng.choice(edges)
        base, reduced = noc_bruteforce(g), noc_bruteforce(g.delete_edge(u, v))
        report.checked += 1
        if reduced < base:
            report.fail(graph=g.to_dict(), edge=[u, v], noc=base, noc_without_edge=reduced)
    return report


def spanning_tree_suite(n_max: int = 6) -> LabReport:
    """Spanning-tree strictness on every connected labeled graph with ``3 <= n <= n_max``, ``|E| >= |V|``."""
    _require_range("spanning-tree suite", n_max, (3, CONNECTED_EXHAUSTION_MAX))
    report = LabReport("spanning-tree")
    tree_cache = {}
    graphs = 0
    for n in range(3, n_max + 1):
        for g in connected_labeled_graphs(n):
            if g.edge_count < n:
                continue
            graphs += 1
            base = noc_bruteforce(g)
            for t in spanning_trees(g):
                key = tuple(t.edges())
                if key not in tree_cache:
                    tree_cache[key] = noc_tree(t)
                report.checked += 1
                if not base < tree_cache[key]:
                    report.fail(graph=g.to_dict(), tree=t.to_dict(), noc=base, noc_tree=tree_cache[key])
    report.details.update(n_max=n_max, graphs=graphs)
    return report


def verify_star_maximality(n: int, trees_only: bool = False) -> LabReport:
    """Finds the maximum noc over connected labeled graphs (or trees) on ``n`` vertices.

    The maximum must be ``2^(n-1) + n`` and the achievers exactly the stars, plus the
    paths when ``n`` is 4 or 5.

    Raises:
        PreconditionError: If ``n`` is outside ``2 .. 6`` (``2 .. 9`` with ``trees_only``).
    """
    if trees_only:
        _require_range("tree maximality", n, TREE_ENUMERATION_RANGE)
        stream = all_labeled_trees(n)
    else:
        _require_range("connected maximality", n, (2, CONNECTED_EXHAUSTION_MAX))
        stream = connected_labeled_graphs(n)

    report = LabReport("extremal")
    best, achievers = -1, []
    for g in stream:
        value = noc_tree(g) if trees_only else noc_bruteforce(g)
        report.checked += 1
        if value > best:
            best, achievers = value, [g]
        elif value == best:
            achievers.append(g)

    expected = noc_star_closed(n)
    star_print = _fingerprint(star(n))
    path_print = ",".join(["2"] * (n - 2) + ["1", "1"])
    allowed = {star_print} | ({path_print} if n in (4, 5) else set())
    prints = {_fingerprint(g) for g in achievers}

    # labeled stars: n centers (one graph when n = 2); labeled paths: n!/2
    star_total = 1 if n == 2 else n
    path_total = 1
    for i in range(3, n + 1):
        path_total *= i
    expected_achievers = star_total + (path_total if n in (4, 5) else 0)

    report.details.update(
        n=n,
        family="trees" if trees_only else "connected graphs",
        max_noc=best,
        expected_max=expected,
        achievers=len(achievers),
        expected_achievers=expected_achievers,
        achiever_degree_sequences=sorted(prints),
    )
    if best != expected:
        report.fail(reason="maximum differs from 2^(n-1) + n", max_noc=best, expected=expected)
    if not prints <= allowed:
        report.fail(reason="unexpected achiever", degree_sequences=sorted(prints - allowed))
    if len(achievers) != expected_achievers:
        report.fail(reason="achiever count", achievers=len(achievers), expected=expected_achievers)
    return report


def verify_wg_gap(n: int) -> LabReport:
    """Checks ``w - g >= n - 1`` at every leaf of every branching labeled tree on ``n`` vertices.

    For a leaf ``r`` with neighbor ``r'``, the counts are those of ``T - r`` rooted at ``r'``.
    The leaf identity ``noc(T) = 2 noc(T') + (g - w)`` is checked along the way.
    """
    _require_range("W-G gap", n, WG_GAP_RANGE)
    report = LabReport("wg-gap")
    trees = 0
    smallest_gap = None
    for t in all_labeled_trees(n):
        if classify_tree(t) != "branching":
            continue
        trees += 1
        for leaf in (v for v in t.vertices() if t.degree(v) == 1):
            parts = leaf_decomposition(t, leaf)
            gap = parts["w"] - parts["g"]
            report.checked += 1
            smallest_gap = gap if smallest_gap is None else min(smallest_gap, gap)
            if gap < n - 1 or parts["rebuilt"] != parts["noc"]:
                report.fail(tree=t.to_dict(), leaf=leaf, gap=gap, noc=parts["noc"], rebuilt=parts["rebuilt"])
    report.details.update(n=n, branching_trees=trees, smallest_gap=smallest_gap, required_gap=n - 1)
    return report


def table1(n_max: int) -> list[tuple[int, int, int]]:
    """Rows ``(n, noc(P_n), noc(K_{1,n-1}))`` for ``n = 1 .. n_max``."""
    if not isinstance(n_max, int) or n_max < 1:
        raise PreconditionError(f"table needs n_max >= 1, got {n_max!r}")
    return [(n, noc_path_recurrence(n), noc_star_closed(n)) for n in range(1, n_max + 1)]


def table1_frame(n_max: int) -> pd.DataFrame:
    return pd.DataFrame(table1(n_max), columns=["n", "noc_path", "noc_star"])


def verify_table1(n_max: int = 10) -> LabReport:
    """The path and star table against the reference rows (``n <= 10``) and against the tree dynamic program."""
    report = LabReport("table1")
    rows = []
    for n, noc_path, noc_star in table1(n_max):
        report.checked += 1
        rows.append({"n": n, "noc_path": str(noc_path), "noc_star": str(noc_star)})
        if n <= len(TABLE1_PATHS) and (noc_path, noc_star) != (TABLE1_PATHS[n - 1], TABLE1_STARS[n - 1]):
            report.fail(n=n, noc_path=noc_path, noc_star=noc_star,
                        expected=[TABLE1_PATHS[n - 1], TABLE1_STARS[n - 1]])
        if noc_path != noc_tree(path(n)) or noc_star != noc_tree(star(n)):
            report.fail(n=n, reason="tree dynamic program disagrees")
    report.details["rows"] = rows
    return report


def verify_max_degree_one_extremal(n_max: int = 6) -> LabReport:
    """Checks that ``noc(G) = 2^n`` exactly when G has max degree at most 1."""
    _require_range("max-degree-one check", n_max, (1, CONNECTED_EXHAUSTION_MAX))
    report = LabReport("max-degree-one")
    for n in range(1, n_max + 1):
        for g in all_labeled_graphs(n):
            report.checked += 1
            full = noc_bruteforce(g) == 1 << n
            if full != (g.max_degree() <= 1):
                report.fail(graph=g.to_dict(), all_subsets_convex=full)
    report.details["n_max"] = n_max
    return report


def verify_subtree_convexity(samples: int = 100, n_max: int = 12, seed: int = 0,
                             subsets_per_tree: int = 20) -> LabReport:
    """Checks that the vertex set of every sampled subtree of a random tree is P3-convex."""
    rng = random.Random(seed)
    report = LabReport("subtree-convexity")
    for _ in range(samples):
        t = random_tree(rng.randint(2, n_max), rng.randrange(1 << 30))
        for _ in range(subsets_per_tree):
            start = rng.randrange(t.vertex_count)
            target = rng.randint(1, t.vertex_count)
            chosen = {start}
            frontier = [w for w in t.neighbors(start)]
            while frontier and len(chosen) < target:
                w = frontier.pop(rng.randrange(len(frontier)))
                if w not in chosen:
                    chosen.add(w)
                    frontier.extend(x for x in t.neighbors(w) if x not in chosen)
            report.checked += 1
            if not is_p3_convex(t, chosen):
                report.fail(tree=t.to_dict(), subtree=sorted(chosen))
    report.details.update(samples=samples, n_max=n_max, seed=seed)
    return report


def verify_local_patterns(exhaustive_n: int = 5, samples: int = 200, n_max: int = 8, seed: int = 0) -> LabReport:
    """Star pattern counts and the major-block trichotomy.

    The oracle must find exactly 12, 21 and 38 convex sets on ``K_{1,3}``, ``K_{1,4}`` and
    ``K_{1,5}``. For every labeled graph on ``exhaustive_n`` vertices and ``samples`` random
    graphs up to ``n_max`` vertices, every convex set meets each major block in no vertex,
    one vertex or the whole block.
    """
    report = LabReport("patterns")
    star_counts = {}
    for leaves, expected in STAR_PATTERN_COUNTS.items():
        found = noc_bruteforce(star(leaves + 1))
        star_counts[f"K1,{leaves}"] = found
        report.checked += 1
        if found != expected:
            report.fail(shape=f"K1,{leaves}", found=found, expected=expected)

    rng = random.Random(seed)
    graphs = list(all_labeled_graphs(exhaustive_n))
    graphs += [random_gnp(rng.randint(3, n_max), rng.choice((0.3, 0.5, 0.8)), rng.randrange(1 << 30))
               for _ in range(samples)]
    with_blocks = 0
    for g in graphs:
        blocks = [mask_of(b) for b in decompose(g, "A").blocks]
        if not blocks:
            continue
        with_blocks += 1
        for s in BruteForceOracle(g).convex_masks():
            for block in blocks:
                inside = (s & block).bit_count()
                report.checked += 1
                if inside not in (0, 1, block.bit_count()):
                    report.fail(graph=g.to_dict(), convex_set=s, block=block)
    report.details.update(star_counts=star_counts, graphs_with_blocks=with_blocks)
    return report


def verify_threshold_formula(n_max: int = 10) -> LabReport:
    """Closed form against the oracle on every creation sequence of length ``n <= n_max``,
    plus the rebuild of each graph from its recognized sequence."""
    _require_range("threshold sweep", n_max, (1, 16))
    report = LabReport("threshold")
    for n in range(1, n_max + 1):
        for bits in range(1 << (n - 1)):
            tags = "I" + "".join("U" if (bits >> i) & 1 else "I" for i in range(n - 1))
            g = threshold_from_sequence(tags)
            report.checked += 1
            formula, oracle = noc_threshold(g), noc_bruteforce(g)
            if formula != oracle:
                report.fail(sequence=tags, formula=formula, oracle=oracle)
            profile = recognize_threshold(g)
            if not isinstance(profile, ThresholdProfile):
                report.fail(sequence=tags, reason="not recognized")
                continue
            rebuilt = threshold_from_sequence(profile.creation_sequence)
            order = profile.creation_order
            if sorted(tuple(sorted((order[u], order[v]))) for u, v in rebuilt.edges()) != g.edges():
                report.fail(sequence=tags, reason="recognized sequence does not rebuild the graph",
                            recognized=profile.sequence_text)
    report.details["n_max"] = n_max
    return report


def verify_tree_dp(exhaustive_n: int = 7, samples: int = 500, random_range: tuple[int, int] = (8, 14),
                   seed: int = 0) -> LabReport:
    """Tree dynamic program against the oracle, root independence and ``g <= w`` at every subtree."""
    report = LabReport("trees")

    def check(t: Graph) -> None:
        report.checked += 1
        expected = noc_bruteforce(t)
        totals = {noc_rooted(root_tree(t, r)).total for r in t.vertices()}
        if totals != {expected}:
            report.fail(tree=t.to_dict(), oracle=expected, dp=sorted(totals))
        if any(c.g > c.w for c in subtree_counts(root_tree(t))):
            report.fail(tree=t.to_dict(), reason="g > w at some subtree")

    for n in range(TREE_ENUMERATION_RANGE[0], exhaustive_n + 1):
        for t in all_labeled_trees(n):
            check(t)
    rng = random.Random(seed)
    low, high = random_range
    for _ in range(samples):
        check(random_tree(rng.randint(low, high), rng.randrange(1 << 30)))
    report.details.update(exhaustive_n=exhaustive_n, samples=samples, seed=seed)
    return report


def verify_reduction_suite(exhaustive_n: int = 5, samples: int = 200, n_max: int = 8, seed: int = 0,
                           strict_published: bool = False) -> LabReport:
    """Reduction checks on every labeled graph on ``exhaustive_n`` vertices and ``samples``
    random graphs with at most ``n_max`` vertices.

    Each constructed H must be split, must not contain two disjoint induced ``K_{1,4}`` and
    must match the closed form for noc(H). Failures of the published identity are counted
    in the details; with ``strict_published`` they are violations.
    """
    rng = random.Random(seed)
    graphs = list(all_labeled_graphs(exhaustive_n)) if exhaustive_n else []
    graphs += [random_gnp(rng.randint(1, n_max), rng.choice((0.1, 0.3, 0.5)), rng.randrange(1 << 30))
               for _ in range(samples)]

    report = LabReport("reduction")
    published_failures = 0
    for g in graphs:
        outcome = verify_reduction_identity(g)
        report.checked += 1
        if not outcome.identity_holds:
            published_failures += 1
            if strict_published:
                report.fail(graph=g.to_dict(), noc_h=outcome.noc_h, published=outcome.published_value)
        if not outcome.closed_form_holds:
            report.fail(graph=g.to_dict(), noc_h=outcome.noc_h, closed_form=outcome.closed_form_value)
        if not outcome.h_is_split or outcome.h_has_two_disjoint_k14:
            report.fail(graph=g.to_dict(), split=outcome.h_is_split,
                        two_disjoint_k14=outcome.h_has_two_disjoint_k14)
    report.details.update(
        exhaustive_n=exhaustive_n,
        samples=samples,
        seed=seed,
        published_identity_failures=published_failures,
        identity="published" if strict_published else "closed form",
    )
    if published_failures:
        log.info("published reduction identity failed on %d of %d graphs", published_failures, report.checked)
    return report
