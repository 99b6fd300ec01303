"""Command-line interface.

Subcommands: ``generate`` (synthesize a scale-free graph file), ``run``
(benchmark one kernel, optionally writing the delimited result, the JSON
report, and a timing figure), ``validate`` (structural check), and ``info``
(graph statistics, optionally with a degree-distribution figure).

Exit codes: 0 success, 1 usage error, 2 parse/validation failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ._version import __version__
from .core import GraphBenchError, build_csr, validate
from .fileformat import ParseError, parse, serialize
from .generator import GeneratorParams, generate
from .harness import (OracleMismatchError, RunConfig, ValidationFailedError,
                      emit_report, graph_stats, load_graph, render_result, run)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this suite reserves 2 for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphbench",
                     description="Scale-free graph kernel benchmark suite")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="generate a scale-free graph file")
    p_gen.add_argument("--vertices", type=int, required=True)
    p_gen.add_argument("--avg-degree", type=int, default=8)
    p_gen.add_argument("--clique-size", type=int, default=5)
    p_gen.add_argument("--seed", type=int, default=42)
    p_gen.add_argument("--out", required=True)

    p_run = sub.add_parser("run", help="benchmark one kernel")
    p_run.add_argument("--kernel", choices=["k1", "k2", "k3", "k4", "k5"],
                       required=True)
    p_run.add_argument("--graph", required=True)
    p_run.add_argument("--repr", choices=["csr", "adj"], default="csr")
    p_run.add_argument("--reps", type=int, default=1)
    p_run.add_argument("--warmup", type=int, default=0)
    p_run.add_argument("--verify", action="store_true")
    p_run.add_argument("--source", type=int, help="k1 source vertex")
    p_run.add_argument("--epsilon", type=float, default=1e-9,
                       help="k2 convergence threshold")
    p_run.add_argument("--max-iters", type=int, default=10000,
                       help="k2/k5 iteration cap")
    p_run.add_argument("--gamma", type=float, help="k3 reduction ratio")
    p_run.add_argument("--seed", type=int, default=0,
                       help="k3 selection / k4 sampling seed")
    p_run.add_argument("--samples", type=int, help="k4 sampled vertex count")
    p_run.add_argument("--alpha", type=float, help="k5 color filter threshold")
    p_run.add_argument("--report", help="write the JSON report here (default stdout)")
    p_run.add_argument("--result", help="write the delimited kernel result here")
    p_run.add_argument("--out-coalesced", help="k3: write the coalesced graph here")
    p_run.add_argument("--figure", help="write a per-repetition timing figure here")

    p_val = sub.add_parser("validate", help="structurally validate a graph file")
    p_val.add_argument("--graph", required=True)

    p_info = sub.add_parser("info", help="print graph statistics")
    p_info.add_argument("--graph", required=True)
    p_info.add_argument("--figure", help="write a degree-distribution figure here")
    return parser


def _cmd_generate(args) -> int:
    params = GeneratorParams(n=args.vertices, avg_degree=args.avg_degree,
                             clique_size=args.clique_size, seed=args.seed)
    result = generate(params)
    g = build_csr(result.n, result.colors, result.edges)
    Path(args.out).write_text(serialize(g), encoding="utf-8")
    print(f"wrote {args.out}: n={result.n} m={len(result.edges)} "
          f"skip_rate={result.skip_rate:.6f}")
    return EXIT_OK


def _cmd_run(args) -> int:
    config = RunConfig(kernel=args.kernel, graph_path=args.graph,
                       representation=args.repr, repetitions=args.reps,
                       warmup=args.warmup, verify=args.verify,
                       source=args.source, epsilon=args.epsilon,
                       max_iterations=args.max_iters, gamma=args.gamma,
                       seed=args.seed, samples=args.samples, alpha=args.alpha)
    try:
        report = run(config)
    except OracleMismatchError as exc:
        print(f"verification FAILED: {exc}", file=sys.stderr)
        if args.report:
            Path(args.report).write_text(emit_report(exc.report), encoding="utf-8")
        return EXIT_VERIFY
    text = emit_report(report)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.result or args.out_coalesced:
        # re-run once untimed to materialize the (deterministic) result
        from .harness import _kernel_callable
        g = load_graph(config.graph_path, config.representation)
        result = _kernel_callable(g, config)()
        if args.result:
            Path(args.result).write_text(render_result(config.kernel, result),
                                         encoding="utf-8")
        if args.out_coalesced and config.kernel == "k3":
            Path(args.out_coalesced).write_text(serialize(result.coalesced),
                                                encoding="utf-8")
    if args.figure:
        from .figures import save_timing_figure
        save_timing_figure(report, args.figure)
    return EXIT_OK


def _cmd_validate(args) -> int:
    text = Path(args.graph).read_text(encoding="utf-8")
    g = parse(text)
    report = validate(g)
    if not report.ok:
        for violation in report.violations:
            print(f"{violation.code}: {violation.detail}", file=sys.stderr)
        return EXIT_DATA
    print(f"{args.graph}: OK ({g.n} vertices, "
          f"{g.undirected_edge_count()} edges)")
    return EXIT_OK


def _cmd_info(args) -> int:
    g = load_graph(args.graph)
    stats = graph_stats(g)
    for key in ("n", "undirected_edges", "mean_degree", "max_degree"):
        print(f"{key} {stats[key]}")
    if args.figure:
        from .figures import save_degree_figure
        save_degree_figure(g, args.figure)
    return EXIT_OK


_COMMANDS = {"generate": _cmd_generate, "run": _cmd_run,
             "validate": _cmd_validate, "info": _cmd_info}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValidationFailedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except GraphBenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
