"""
Bench

Runs the structured counter across graph families, sizes and variants and collects
the instrumentation in a pandas DataFrame (one row per run). Descriptive only: the
rows report what each run enumerated and how long it took.
"""

# Standard library imports
import logging
import time

# Third-party libraries
import pandas as pd

# Project-specific modules
from p3count.constants import BENCH_FAMILIES, VARIANTS
from p3count.errors import CapExceededError, PreconditionError
from p3count.exact.structured import noc_structured
from p3count.generators import graph_from_spec

log = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "family", "n", "variant", "colorings_enumerated", "colorings_predicted", "p", "q", "r", "t",
    "wall_time_ms", "noc",
]

FAMILY_MIN_N = {"cycle": 3}


def parse_n_range(text: str) -> tuple[int, int]:
    """Parses ``"a..b"`` (or a single ``"n"``) into an inclusive range.

    Raises:
        PreconditionError: On malformed text or ``a > b``.
    """
    low, sep, high = text.partition("..")
    try:
        a = int(low)
        b = int(high) if sep else a
    except ValueError:
        raise PreconditionError(f"malformed n-range '{text}' (expected a..b)") from None
    if a < 1 or a > b:
        raise PreconditionError(f"n-range '{text}' must satisfy 1 <= a <= b")
    return a, b


def _spec_for(family: str, n: int) -> str:
    if family == "gnp":
        return f"gnp:{n}:0.5"
    return f"{family}:{n}"


def run_bench(families=None, n_range: tuple[int, int] = (4, 10), variants=None,
              seed: int = 0, cap: int = None) -> pd.DataFrame:
    """Counts every (family, n, variant) combination and returns the rows.

    Runs the cap refuses are logged and skipped.

    Args:
        families (Iterable[str], optional): Generator families. If None, uses ``BENCH_FAMILIES``.
        n_range (tuple[int, int]): Inclusive range of vertex counts.
        variants (Iterable[str], optional): Structured variants. If None, all three.
        seed (int): Seed for the random families.
        cap (int, optional): Enumeration cap.

    Raises:
        PreconditionError: On an unknown family or variant.
    """
    families = list(families) if families else list(BENCH_FAMILIES)
    variants = list(variants) if variants else list(VARIANTS)
    for family in families:
        if family not in BENCH_FAMILIES:
            raise PreconditionError(f"unknown bench family '{family}' (known: {', '.join(BENCH_FAMILIES)})")
    for variant in variants:
        if variant not in VARIANTS:
            raise PreconditionError(f"unknown variant '{variant}' (known: {', '.join(VARIANTS)})")

    rows = []
    low, high = n_range
    for family in families:
        for n in range(max(low, FAMILY_MIN_N.get(family, 1)), high + 1):
            g = graph_from_spec(_spec_for(family, n), seed=seed)
            for variant in variants:
                start = time.perf_counter()
                try:
                    result = noc_structured(g, variant, cap=cap)
                except CapExceededError as ex:
                    log.info("skipping %s n=%d variant %s: %s", family, n, variant, ex)
                    continue
                elapsed = (time.perf_counter() - start) * 1000.0
                rows.append({
                    "family": family,
                    "n": n,
                    "variant": variant,
                    "colorings_enumerated": result.colorings_enumerated,
                    "colorings_predicted": result.bound.predicted,
                    "p": result.trace.p,
                    "q": result.trace.q,
                    "r": result.trace.r,
                    "t": result.trace.t,
                    "wall_time_ms": round(elapsed, 3),
                    "noc": str(result.noc),
                })
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)
