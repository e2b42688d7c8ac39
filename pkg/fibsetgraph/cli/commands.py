"""
Command-line front end: generate, analyze and verify
"""
import argparse
import dataclasses
import json
import logging
import sys

from fibsetgraph.analysis.invariants import (
    is_bipartite,
    is_connected,
    is_eulerian,
    loop_sequence,
    pendant_vertices,
)
from fibsetgraph.analysis.solvers import (
    CycleOutcome,
    chromatic_number,
    clique_number,
    eared_clique_number,
    hamiltonian_cycle,
)
from fibsetgraph.cli.documents import loads_json, render
from fibsetgraph.config import load_settings
from fibsetgraph.errors import (
    EXIT_DEVIATION,
    EXIT_IO,
    EXIT_OK,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    ConfigError,
    DomainError,
    FibSetGraphError,
)
from fibsetgraph.generators.families import (
    EdgeSemantics,
    gen_fib_sum_graph,
    gen_fib_sum_set_graph,
    gen_set_graph,
    gen_set_graph_of_graph,
)
from fibsetgraph.graphcore.graphs import GraphOrigin, MultiGraph, SimpleGraph, degrees, popped
from fibsetgraph.numseq.sequences import SequenceKind, sequence_for
from fibsetgraph.setspace.subsets import SubsetId
from fibsetgraph.verify.claims import ClaimStatus
from fibsetgraph.verify.suite import run_suite, write_report_lines

logger = logging.getLogger(__name__)

FAMILIES = ("fib_sum", "set_graph", "fib_sum_set", "set_graph_of_graph", "popped")
INVARIANTS = (
    "degrees", "loops", "connected", "pendant", "eulerian", "hamiltonian",
    "bipartite", "clique", "eared_clique", "chromatic", "loop_sequence",
)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_host_edges(text, n):
    """
    Parses "1-2,2-3" into a host graph on vertices 1..n

    Returns:
        SimpleGraph: Host whose vertex k carries the singleton {k+1}
    """
    edges = []
    for chunk in filter(None, (part.strip() for part in text.split(","))):
        try:
            u, v = (int(x) for x in chunk.split("-"))
        except ValueError:
            raise DomainError(f"host edge {chunk!r} is not of the form u-v") from None
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise DomainError(f"host edge {chunk!r} must join two distinct vertices in 1..{n}")
        edges.append((u - 1, v - 1))
    meta = tuple(SubsetId(1 << k, n) for k in range(1, n + 1))
    return SimpleGraph.from_edges(n, edges, meta, GraphOrigin("host", n=n))


def build_graph(family, n, semantics, sequence, cap, host_edges=None):
    """Builds one of the named families, honouring the materialization cap"""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    seq = sequence_for(sequence, 2 * n)
    if family == "fib_sum":
        return gen_fib_sum_graph(n, seq)
    if family == "set_graph":
        return gen_set_graph(n, cap)
    if family == "fib_sum_set":
        return gen_fib_sum_set_graph(n, seq, semantics, cap)
    if family == "popped":
        return popped(gen_fib_sum_set_graph(n, seq, semantics, cap))
    if family == "set_graph_of_graph":
        host = parse_host_edges(host_edges, n) if host_edges is not None else None
        return gen_set_graph_of_graph(host, semantics, n=n, seq=seq, cap=cap)
    raise DomainError(f"unknown family {family!r}")


def _add_family_arguments(parser, required):
    nargs = None if required else "?"
    parser.add_argument("family", choices=FAMILIES, nargs=nargs, help="Graph family to build")
    parser.add_argument("n", type=int, nargs=nargs, help="Ground-set size")
    parser.add_argument("--semantics", choices=[s.value for s in EdgeSemantics], default="strict",
                        help="Cross-pair counting rule (default: strict)")
    parser.add_argument("--sequence", choices=["fibonacci", "lucas"], default="fibonacci",
                        help="Sum sequence (default: fibonacci)")
    parser.add_argument("--host-edges", default=None,
                        help='Host edges for set_graph_of_graph, e.g. "1-2,2-3" (default: the sum graph)')


def build_parser():
    parser = _Parser(prog="fibsetgraph", description="Fibonacci-sum set-graphs: build, analyze, verify")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Build a graph and write it out")
    _add_family_arguments(generate, required=True)
    generate.add_argument("--format", choices=["json", "dot", "edges"], default="json")
    generate.add_argument("--out", default=None, help="Output path (default: standard output)")

    analyze = commands.add_parser("analyze", help="Compute one invariant")
    _add_family_arguments(analyze, required=False)
    analyze.add_argument("--input", default=None, help="GraphDocument JSON to analyze instead of a family")
    analyze.add_argument("--invariant", choices=INVARIANTS, required=True)
    analyze.add_argument("--budget", type=int, default=None, help="Node-expansion budget for exact solvers")

    verify = commands.add_parser("verify", help="Run the claim suite")
    verify.add_argument("--n-from", type=int, default=1)
    verify.add_argument("--n-to", type=int, default=5)
    verify.add_argument("--semantics", choices=["both", "strict", "inclusive"], default="both")
    verify.add_argument("--sequence", choices=["fibonacci", "lucas"], default="fibonacci")
    verify.add_argument("--budget", type=int, default=None)
    verify.add_argument("--report", default=None, help="Write JSON-lines records to this path")
    return parser


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"✅ Wrote {out}")


def cmd_generate(args, settings):
    graph = build_graph(args.family, args.n, args.semantics, args.sequence, settings.max_n, args.host_edges)
    _write(render(graph, args.format, settings.dot_edge_cap), args.out)
    return EXIT_OK


def _labels(graph, vertices):
    return [graph.label(v) for v in vertices]


def _as_multi(graph):
    return MultiGraph.from_simple(graph) if isinstance(graph, SimpleGraph) else graph


def compute_invariant(graph, name, budget):
    """
    Evaluates one named invariant

    Returns:
        tuple: (value, known, expansions); known is False when a solver ran out of budget
    """
    if name == "degrees":
        return [int(d) for d in degrees(_as_multi(graph))], True, 0
    if name == "loops":
        return [int(c) for c in _as_multi(graph).loops], True, 0
    if name == "loop_sequence":
        return list(loop_sequence(graph)), True, 0
    if name == "connected":
        return is_connected(graph), True, 0
    if name == "pendant":
        return _labels(graph, sorted(pendant_vertices(graph))), True, 0
    if name == "eulerian":
        return is_eulerian(graph), True, 0
    if name == "bipartite":
        return is_bipartite(graph), True, 0
    if name == "hamiltonian":
        result = hamiltonian_cycle(graph, budget)
        if result.outcome is CycleOutcome.UNKNOWN:
            return None, False, result.expansions
        found = result.outcome is CycleOutcome.FOUND
        return {"hamiltonian": found, "cycle": _labels(graph, result.cycle)}, True, result.expansions
    solver = {"clique": clique_number, "eared_clique": eared_clique_number, "chromatic": chromatic_number}[name]
    result = solver(graph, budget)
    return result.value, result.known, result.expansions


def _provenance(graph):
    origin = graph.origin
    if origin is None:
        return "graph"
    parts = [origin.family]
    if origin.n is not None:
        parts.append(f"n={origin.n}")
    parts.append(f"(semantics: {origin.semantics or 'n/a'}, sequence: {origin.sequence or 'n/a'})")
    return " ".join(parts)


def cmd_analyze(args, settings):
    if args.input is not None:
        with open(args.input, encoding="utf-8") as f:
            graph = loads_json(f.read())
    elif args.family is not None and args.n is not None:
        graph = build_graph(args.family, args.n, args.semantics, args.sequence, settings.max_n, args.host_edges)
    else:
        raise DomainError("analyze needs either --input or a family and n")
    budget = args.budget if args.budget is not None else settings.budget
    value, known, expansions = compute_invariant(graph, args.invariant, budget)

    print(f"📊 {_provenance(graph)}")
    if not known:
        print(f"⚠️ {args.invariant}: unknown (budget of {budget} expansions exhausted)")
        return EXIT_UNKNOWN
    print(f"{args.invariant}: {json.dumps(value)}")
    if expansions:
        print(f"budget: {expansions} of {budget} expansions used")
    return EXIT_OK


def format_table(reports):
    """Fixed-width table of claim reports"""
    rows = [("claim", "n", "semantics", "status", "expected", "witness")]
    for r in reports:
        rows.append((
            r.claim_id, str(r.n), r.semantics.value, r.status.value,
            "pass" if r.expected else "-", r.witness or "",
        ))
    widths = [max(len(row[k]) for row in rows) for k in range(5)]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row[:5], widths)]
        lines.append("  ".join(cells + [row[5]]).rstrip())
    return "\n".join(lines)


def cmd_verify(args, settings):
    if not 1 <= args.n_from <= args.n_to:
        raise DomainError(f"need 1 <= n-from <= n-to, got {args.n_from}..{args.n_to}")
    if args.budget is not None:
        settings = dataclasses.replace(settings, budget=args.budget)
    semantics = list(EdgeSemantics) if args.semantics == "both" else [EdgeSemantics(args.semantics)]
    reports = run_suite(range(args.n_from, args.n_to + 1), semantics, settings, SequenceKind(args.sequence))

    print(format_table(reports))
    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as f:
            write_report_lines(reports, f)

    counts = {status: sum(1 for r in reports if r.status is status) for status in ClaimStatus}
    print("\n📊 Verification Summary:")
    for status, count in counts.items():
        print(f"{status.value}: {count}")
    deviating = [r for r in reports if r.deviates]
    if deviating:
        print(f"❌ {len(deviating)} claim(s) deviate from the expectation table")
        return EXIT_DEVIATION
    print("✅ No deviations from the expectation table")
    return EXIT_OK


def _configure_logging(level):
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"FIBSET_LOG_LEVEL must be a logging level name, got {level!r}")
    logging.basicConfig(level=level, format="%(message)s")


def main(argv=None):
    """Runs one subcommand and returns its exit code"""
    args = build_parser().parse_args(argv)
    handlers = {"generate": cmd_generate, "analyze": cmd_analyze, "verify": cmd_verify}
    try:
        settings = load_settings()
        _configure_logging(settings.log_level)
        return handlers[args.command](args, settings)
    except FibSetGraphError as e:
        print(f"❌ {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"❌ I/O failure: {e}", file=sys.stderr)
        return EXIT_IO
