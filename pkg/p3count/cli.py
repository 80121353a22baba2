#!/usr/bin/env python
"""Command-line front end for p3count.

Subcommands:
    count     Count the P3-convex sets of a graph file or a generator spec.
    verify    Run one verification suite and print its report.
    generate  Print a generated graph in edge-list form.
    bench     Run the structured counter across families and sizes.

Counts, JSON and CSV go to stdout. Labelled status lines, the live timer and error
messages go to stderr. Exit codes: 0 success, 1 verification failure, 2 usage, parse
or precondition error.
"""

# Standard library imports
import argparse
import json
import logging
import os
import sys
import threading
import time
from contextlib import redirect_stdout
from datetime import datetime

# Project-specific modules
from p3count import __version__
from p3count.bench import parse_n_range, run_bench
from p3count.constants import (
    ALGO_AUTO, ALGORITHMS, BENCH_FAMILIES, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, GENERATOR_FAMILIES,
    LABEL_JUST, TIMER_JUST, VERIFY_SUITES,
)
from p3count.core import count_graph
from p3count.errors import P3CountError
from p3count.exact.kl import parse_partition
from p3count.extremal_lab import (
    monotonicity_suite, spanning_tree_suite, verify_local_patterns, verify_reduction_suite, verify_star_maximality,
    verify_table1, verify_threshold_formula, verify_tree_dp, verify_wg_gap,
)
from p3count.generators import graph_from_spec
from p3count.graph import Graph, parse_edge_list
from p3count.results_db import ResultsDatabase

# IO and console output
from printpop import print_cyan, print_green, print_orange, print_red

log = logging.getLogger(__name__)

GENERATOR_HELP = "generator specs (gen:name:params):\n" + "\n".join(
    f"  {usage}" for usage in GENERATOR_FAMILIES.values()
)


class LiveTimer:
    """Shows an elapsed-time counter on stderr while a count runs.

    Attributes:
        running (bool): Cleared by ``stop`` to end the display loop.
    """

    running = False

    def __init__(self, label: str):
        self.label = label
        self.thread = threading.Thread(target=self._show, daemon=True)

    def _show(self):
        with redirect_stdout(sys.stderr):
            start_time = datetime.now()
            print("Count Start:".ljust(LABEL_JUST), end="", flush=True)
            print_cyan(start_time.strftime("%H:%M:%S:%f")[:TIMER_JUST])

            print(f"{self.label}:".ljust(LABEL_JUST), end="", flush=True)
            timer_str = f"{0:05.2f}"
            print_cyan(timer_str, end="", flush=True)
            total_seconds = 0.0
            while self.running:
                total_seconds = (datetime.now() - start_time).total_seconds()
                timer_str = f"\x1b[5D{total_seconds:05.2f}"  # overwrite the last 5 chars
                print_cyan(timer_str, end="", flush=True)
                time.sleep(0.01)
            print_orange(timer_str, flush=True, end="")
            print()

    def start(self):
        self.running = True
        self.thread.start()

    def stop(self):
        self.running = False
        self.thread.join()


def _status(label: str, value) -> None:
    print(f"{label}:".ljust(LABEL_JUST), end="", flush=True)
    print_cyan(value)


def read_graph(source: str, seed: int = None) -> Graph:
    """Loads ``source``: an edge-list or JSON file when the path exists, otherwise a generator spec.

    A ``gen:`` prefix always means a generator spec.

    Raises:
        GraphParseError: If the file content is malformed.
        GraphConstructionError: If the spec is unknown or malformed.
    """
    if not source.startswith("gen:") and os.path.isfile(source):
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
        if source.endswith(".json") or text.lstrip().startswith("{"):
            return Graph.from_json(text)
        return parse_edge_list(text)
    return graph_from_spec(source, seed=seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p3count",
        description="Exact counting of P3-convex vertex sets.",
        epilog=GENERATOR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count the convex sets of a graph",
                           epilog=GENERATOR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    count.add_argument("source", help="edge-list/JSON file or generator spec")
    count.add_argument("--algo", choices=ALGORITHMS, default=ALGO_AUTO)
    count.add_argument("--partition", help="(k,l) partition file for --algo kl")
    count.add_argument("--cap", type=int, help="oracle vertex cap")
    count.add_argument("--enum-cap", type=int, help="enumeration cap of the exponential methods")
    count.add_argument("--workers", type=int, help="worker processes for the oracle")
    count.add_argument("--seed", type=int, help="seed for random generator specs")
    count.add_argument("--json", action="store_true", help="emit a JSON document")
    count.add_argument("--db", help="store the run in this SQLite file")
    count.add_argument("--verbose", action="store_true", help="labelled summary, live timer and debug logs")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--n", type=int, help="size parameter of the suite")
    verify.add_argument("--exhaustive-n", type=int, help="exhaustive size (reduction, patterns, trees)")
    verify.add_argument("--samples", type=int, help="random samples")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trees-only", action="store_true", help="extremal: enumerate trees instead of graphs")
    verify.add_argument("--identity", choices=("closed-form", "published"), default="closed-form",
                        help="reduction: which identity failures count as violations")
    verify.add_argument("--text", action="store_true", help="print an aligned table instead of JSON")
    verify.add_argument("--db", help="store the report in this SQLite file")
    verify.add_argument("--verbose", action="store_true")

    generate = sub.add_parser("generate", help="print a generated graph as an edge list",
                              epilog=GENERATOR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    generate.add_argument("spec")
    generate.add_argument("--seed", type=int)

    bench = sub.add_parser("bench", help="instrumented structured counts across families")
    bench.add_argument("--families", default=",".join(BENCH_FAMILIES), help="comma-separated families")
    bench.add_argument("--n-range", default="4..10", help="inclusive range a..b")
    bench.add_argument("--variants", default="A,B,C", help="comma-separated variants")
    bench.add_argument("--enum-cap", type=int)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--csv", action="store_true", help="emit CSV with a header row")
    bench.add_argument("--db", help="store the rows in this SQLite file")
    bench.add_argument("--verbose", action="store_true")
    return parser


def _split(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def run_count(args, out) -> int:
    g = read_graph(args.source, seed=args.seed)
    partition = None
    if args.partition:
        with open(args.partition, encoding="utf-8") as handle:
            partition = parse_partition(handle.read())

    if args.verbose:
        with redirect_stdout(sys.stderr):
            print()
            _status("Source", args.source)
            _status("Graph", f"n={g.vertex_count} m={g.edge_count}")
            _status("Algorithm", args.algo)
        timer = LiveTimer("Count Timer")
        timer.start()
        try:
            result = count_graph(g, args.algo, partition=partition, cap=args.cap,
                                 enum_cap=args.enum_cap, workers=args.workers)
        finally:
            timer.stop()
        with redirect_stdout(sys.stderr):
            _status("Routes", ", ".join(result.routes))
            _status("Wall Time", f"{result.elapsed_ms:.2f} ms")
    else:
        result = count_graph(g, args.algo, partition=partition, cap=args.cap,
                             enum_cap=args.enum_cap, workers=args.workers)

    if args.db:
        with redirect_stdout(sys.stderr):
            ResultsDatabase(args.db).add_count_run(args.source, result)

    if args.json:
        print(json.dumps(result.to_dict()), file=out)
    else:
        print(result.noc, file=out)
    return EXIT_OK


def run_suite(args):
    """Runs the suite named by ``args.suite`` with the per-suite defaults for unset options."""
    samples = args.samples
    match args.suite:
        case "reduction":
            return verify_reduction_suite(
                exhaustive_n=5 if args.exhaustive_n is None else args.exhaustive_n,
                samples=200 if samples is None else samples,
                n_max=args.n or 8,
                seed=args.seed,
                strict_published=args.identity == "published",
            )
        case "monotonicity":
            return monotonicity_suite(samples=1000 if samples is None else samples, n_max=args.n or 10,
                                      seed=args.seed)
        case "spanning-tree":
            return spanning_tree_suite(n_max=args.n or 6)
        case "extremal":
            return verify_star_maximality(args.n or 5, trees_only=args.trees_only)
        case "table1":
            return verify_table1(args.n or 10)
        case "wg-gap":
            return verify_wg_gap(args.n or 8)
        case "patterns":
            return verify_local_patterns(
                exhaustive_n=5 if args.exhaustive_n is None else args.exhaustive_n,
                samples=200 if samples is None else samples,
                n_max=args.n or 8,
                seed=args.seed,
            )
        case "threshold":
            return verify_threshold_formula(args.n or 10)
        case "trees":
            return verify_tree_dp(
                exhaustive_n=7 if args.exhaustive_n is None else args.exhaustive_n,
                samples=500 if samples is None else samples,
                seed=args.seed,
            )


def run_verify(args, out) -> int:
    started = time.perf_counter()
    report = run_suite(args)
    elapsed = time.perf_counter() - started

    with redirect_stdout(sys.stderr):
        print()
        _status("Suite", report.suite)
        _status("Checked", report.checked)
        print("Result:".ljust(LABEL_JUST), end="", flush=True)
        if report.holds:
            print_green("pass")
        else:
            print_red(f"FAIL ({report.violation_count} violations)")
        _status("Wall Time", f"{elapsed:.2f} s")
        if args.db:
            ResultsDatabase(args.db).add_verification_run(report)

    if args.text:
        print(report.to_text(), file=out)
    else:
        print(json.dumps(report.to_dict()), file=out)
    return EXIT_OK if report.holds else EXIT_VERIFICATION_FAILED


def run_generate(args, out) -> int:
    print(graph_from_spec(args.spec, seed=args.seed).to_edge_list(), file=out)
    return EXIT_OK


def run_bench_command(args, out) -> int:
    frame = run_bench(
        families=_split(args.families),
        n_range=parse_n_range(args.n_range),
        variants=_split(args.variants),
        seed=args.seed,
        cap=args.enum_cap,
    )
    if args.db:
        with redirect_stdout(sys.stderr):
            ResultsDatabase(args.db).add_bench_rows(frame)
    if args.csv:
        frame.to_csv(out, index=False)
    else:
        print(frame.to_string(index=False), file=out)
    return EXIT_OK


def main(argv=None) -> int:
    """Parses ``argv`` and runs one subcommand.

    Returns:
        int: The process exit code.
    """
    args = build_parser().parse_args(argv)
    out = sys.stdout
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        match args.command:
            case "count":
                return run_count(args, out)
            case "verify":
                return run_verify(args, out)
            case "generate":
                return run_generate(args, out)
            case "bench":
                return run_bench_command(args, out)
    except (P3CountError, OSError) as ex:
        with redirect_stdout(sys.stderr):
            print_red(f"Error: {ex}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
