"""
Brute-force oracle

Ground truth for noc(G) and noi(G) by testing every one of the 2^n vertex subsets.
Every other counting algorithm in the package is validated against these functions.

The subsets are visited in ascending bitmask order. The range ``[0, 2^n)`` can be
split into disjoint chunks and counted by a pool of worker processes; the partial
counts are exact integers and combine by addition.
"""

# Standard library imports
from multiprocessing import Pool
from typing import Iterator

# Project-specific modules
from p3count.constants import DEFAULT_ORACLE_CAP
from p3count.errors import CapExceededError
from p3count.graph import Graph, VertexSet, mask_of, members


class BruteForceOracle:
    """Exhaustive subset enumeration over a graph of at most ``cap`` vertices.

    Attributes:
        DEFAULT_CAP (int): Largest vertex count enumerated unless overridden.
        CHUNKS_PER_WORKER (int): Mask ranges handed to each worker process.
    """

    DEFAULT_CAP = DEFAULT_ORACLE_CAP
    CHUNKS_PER_WORKER = 4

    def __init__(self, g: Graph, cap: int = None, workers: int = None):
        """Prepares the oracle for ``g``.

        Args:
            g (Graph): The graph to enumerate.
            cap (int, optional): Vertex cap. If None, uses ``DEFAULT_CAP``.
            workers (int, optional): Worker processes for the counting loops. If None, counts
                in-process.

        Raises:
            CapExceededError: If ``g`` has more than ``cap`` vertices.
        """
        if cap is None:
            cap = self.DEFAULT_CAP
        if g.vertex_count > cap:
            raise CapExceededError("brute-force oracle", cap, g.vertex_count)
        self.graph = g
        self.cap = cap
        self.workers = workers if workers and workers > 1 else 1
        self.rows = g.neighbor_masks

    def _ranges(self) -> list[tuple[int, int]]:
        total = 1 << self.graph.vertex_count
        pieces = min(total, self.workers * self.CHUNKS_PER_WORKER)
        step = -(-total // pieces)
        return [(start, min(start + step, total)) for start in range(0, total, step)]

    def _count(self, worker) -> int:
        if self.workers == 1:
            return worker(self.rows, 0, 1 << self.graph.vertex_count)
        jobs = [(self.rows, start, stop) for start, stop in self._ranges()]
        with Pool(processes=self.workers) as pool:
            return sum(pool.starmap(worker, jobs))

    def count_convex(self) -> int:
        return self._count(_count_convex_range)

    def count_independent(self) -> int:
        return self._count(_count_independent_range)

    def convex_masks(self) -> Iterator[int]:
        rows = self.rows
        for s in range(1 << self.graph.vertex_count):
            if _mask_is_convex(rows, s):
                yield s


def _mask_is_convex(rows: tuple[int, ...], s: int) -> bool:
    for v, row in enumerate(rows):
        if not (s >> v) & 1:
            hit = row & s
            if hit & (hit - 1):
                return False
    return True


def _count_convex_range(rows: tuple[int, ...], start: int, stop: int) -> int:
    total = 0
    for s in range(start, stop):
        for v, row in enumerate(rows):
            if not (s >> v) & 1:
                hit = row & s
                if hit & (hit - 1):
                    break
        else:
            total += 1
    return total


def _count_independent_range(rows: tuple[int, ...], start: int, stop: int) -> int:
    total = 0
    for s in range(start, stop):
        for v, row in enumerate(rows):
            if (s >> v) & 1 and row & s:
                break
        else:
            total += 1
    return total


def noc_bruteforce(g: Graph, cap: int = None, workers: int = None) -> int:
    """Counts the P3-convex sets of ``g`` by testing all 2^n subsets.

    Raises:
        CapExceededError: If ``g`` has more vertices than the cap.
    """
    return BruteForceOracle(g, cap=cap, workers=workers).count_convex()


def noi_bruteforce(g: Graph, cap: int = None, workers: int = None) -> int:
    """Counts the independent sets of ``g`` (the empty set included) by testing all subsets."""
    return BruteForceOracle(g, cap=cap, workers=workers).count_independent()


def enumerate_convex_sets(g: Graph, cap: int = None) -> Iterator[VertexSet]:
    """Yields every P3-convex set of ``g`` exactly once, in ascending bitmask order."""
    for s in BruteForceOracle(g, cap=cap).convex_masks():
        yield VertexSet(members(s))


def convex_closure(g: Graph, s) -> VertexSet:
    """Returns the smallest P3-convex set containing ``s``.

    Repeatedly adds every outside vertex with two or more neighbors in the set.
    """
    rows = g.transient_masks()
    closed = mask_of(s)
    changed = True
    while changed:
        changed = False
        for v, row in enumerate(rows):
            if not (closed >> v) & 1:
                hit = row & closed
                if hit & (hit - 1):
                    closed |= 1 << v
                    changed = True
    return VertexSet(members(closed))
