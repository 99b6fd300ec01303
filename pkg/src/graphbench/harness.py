"""Run orchestration: timing, result rendering, verification, JSON reports.

A run loads the graph file once, builds the requested representation once,
executes the configured warmup repetitions untimed, then times the kernel
alone for each measured repetition with the monotonic nanosecond clock.
Parsing, representation construction, verification, and report emission are
never inside the timed region.  Kernels are re-seeded identically for every
repetition, so each one performs identical work and the rendered result
(and its FNV-1a checksum) is repetition-independent.
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from ._version import __version__
from .core import Graph, GraphBenchError, graphs_equal, restore, to_adjlist, validate
from .fileformat import checksum, fmt_float, parse, serialize
from .kernels import coalesce, metric, optimize, search, spectral
from .kernels.coalesce import CoalesceParams
from .kernels.metric import MetricParams
from .kernels.optimize import OptimizeParams
from .kernels.spectral import SpectralParams
from . import oracles

__all__ = [
    "KERNELS",
    "REPRESENTATIONS",
    "ValidationFailedError",
    "OracleMismatchError",
    "RunConfig",
    "KernelReport",
    "load_graph",
    "graph_stats",
    "render_result",
    "run",
    "emit_report",
]

KERNELS = ("k1", "k2", "k3", "k4", "k5")
REPRESENTATIONS = ("csr", "adj")


class ValidationFailedError(GraphBenchError):
    """The input graph failed structural validation."""


class OracleMismatchError(GraphBenchError):
    """Verification against the oracle failed. Carries the failed report."""

    def __init__(self, message: str, report: "KernelReport"):
        super().__init__(message)
        self.report = report


@dataclass
class RunConfig:
    """One benchmark run: kernel, input, representation, and parameters."""

    kernel: str
    graph_path: str | Path
    representation: str = "csr"
    repetitions: int = 1
    warmup: int = 0
    verify: bool = False
    # kernel parameters (only the ones for the chosen kernel are read)
    source: int | None = None
    epsilon: float = 1e-9
    max_iterations: int = 10000
    gamma: float | None = None
    seed: int = 0
    samples: int | None = None
    alpha: float | None = None

    def check(self) -> None:
        if self.kernel not in KERNELS:
            raise GraphBenchError(f"unknown kernel {self.kernel!r}")
        if self.representation not in REPRESENTATIONS:
            raise GraphBenchError(f"unknown representation {self.representation!r}")
        if self.repetitions < 1:
            raise GraphBenchError("repetitions must be >= 1")
        if self.warmup < 0:
            raise GraphBenchError("warmup must be >= 0")
        required = {"k1": ("source",), "k3": ("gamma",), "k4": ("samples",)}
        for name in required.get(self.kernel, ()):
            if getattr(self, name) is None:
                raise GraphBenchError(f"kernel {self.kernel} requires --{name}")
        if self.kernel == "k5" and self.alpha is None:
            raise GraphBenchError("kernel k5 requires --alpha")


@dataclass
class KernelReport:
    kernel: str
    parameters: dict
    representation: str
    graph: dict
    repetitions: int
    warmup: int
    timings_ns: list[int]
    timing_summary_ns: dict
    result_checksum: str
    verification: str
    seeds: dict
    tool_version: str = field(default=__version__)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "kernel": self.kernel,
            "parameters": self.parameters,
            "repetitions": self.repetitions,
            "representation": self.representation,
            "result_checksum": self.result_checksum,
            "seeds": self.seeds,
            "timing_summary_ns": self.timing_summary_ns,
            "timings_ns": self.timings_ns,
            "tool_version": self.tool_version,
            "verification": self.verification,
            "warmup": self.warmup,
        }


def load_graph(path: str | Path, representation: str = "csr") -> Graph:
    """Parse and validate a graph file, building the requested representation."""
    text = Path(path).read_text(encoding="utf-8")
    g = parse(text)
    report = validate(g)
    if not report.ok:
        raise ValidationFailedError(
            f"{path}: {len(report.violations)} violation(s), "
            f"first: {report.violations[0]}")
    if representation == "adj":
        return to_adjlist(g)
    return g


def graph_stats(g: Graph) -> dict:
    n = g.n
    m = g.undirected_edge_count()
    max_degree = max((g.degree(u) for u in range(n)), default=0)
    mean_degree = (2.0 * m / n) if n else 0.0
    return {"n": n, "undirected_edges": m,
            "mean_degree": mean_degree, "max_degree": max_degree}


# ---------------------------------------------------------------------------
# Canonical result rendering (feeds the checksum and the result file)
# ---------------------------------------------------------------------------


def render_result(kernel: str, result) -> str:
    if kernel == "k1":
        return "".join(f"{v} {fmt_float(w)}\n" for v, w in enumerate(result))
    if kernel == "k2":
        lines = [f"{i} {fmt_float(v)}" for i, v in enumerate(result.x)]
        lines.append(f"theta {fmt_float(result.theta)}")
        lines.append(f"iterations {result.iterations}")
        return "\n".join(lines) + "\n"
    if kernel == "k3":
        return serialize(result.coalesced)
    if kernel == "k4":
        return "".join(f"{u} {fmt_float(cc)}\n" for u, cc in result)
    if kernel == "k5":
        lines = [str(result.k)]
        for group in sorted(result.partition.groups, key=min):
            lines.append(" ".join(str(v) for v in sorted(group)))
        return "\n".join(lines) + "\n"
    raise GraphBenchError(f"unknown kernel {kernel!r}")


# ---------------------------------------------------------------------------
# Verification against the oracles
# ---------------------------------------------------------------------------


def _verify_k1(g: Graph, config: RunConfig, result) -> bool:
    return oracles.oracle_dijkstra(g, config.source) == result


def _verify_k2(g: Graph, config: RunConfig, result) -> bool:
    mat = oracles.dense_matrix(g)
    n = g.n
    x = [1.0 / n] * n if n else []
    theta = float("inf")
    t = 0
    while t < config.max_iterations and theta > config.epsilon:
        y = oracles.oracle_power_step(mat, x)
        norm = 0.0
        for v in y:
            norm += abs(v)
        if norm == 0.0:
            return False
        x_next = [v / norm for v in y]
        diff = 0.0
        for a, b in zip(x_next, x):
            diff += abs(a - b)
        prev = 0.0
        for v in x:
            prev += abs(v)
        theta = diff / prev
        x = x_next
        t += 1
    return (t == result.iterations and theta == result.theta
            and x == result.x)


def _verify_k3(g: Graph, config: RunConfig, result) -> bool:
    if not validate(result.coalesced).ok:
        return False
    return graphs_equal(restore(result.original), g)


def _verify_k4(g: Graph, config: RunConfig, result) -> bool:
    if len(result) != config.samples:
        return False
    pairs = oracles.directed_pair_set(g)
    for u, cc in result:
        if oracles.oracle_cc(g, u, pairs) != cc:
            return False
    return True


def _verify_k5(g: Graph, config: RunConfig, result) -> bool:
    kept = {v for v in range(g.n) if g.colors[v] > config.alpha}
    entries = [(u, v) for u in kept for v, _ in g.neighbors(u) if v in kept]
    groups = result.partition.groups
    if result.k != len(groups):
        return False
    if not kept:
        return result.k == 0
    union: set[int] = set()
    for group in groups:
        if not group or union & group:
            return False
        union |= group
    if union != kept:
        return False
    return abs(oracles.oracle_objective(groups, entries) - result.objective) <= 1e-9


_VERIFIERS = {"k1": _verify_k1, "k2": _verify_k2, "k3": _verify_k3,
              "k4": _verify_k4, "k5": _verify_k5}


# ---------------------------------------------------------------------------
# The run itself
# ---------------------------------------------------------------------------


def _kernel_callable(g: Graph, config: RunConfig) -> Callable[[], object]:
    # Module-attribute lookups at call time keep the kernels monkeypatchable.
    if config.kernel == "k1":
        return lambda: search.run_k1(g, config.source)
    if config.kernel == "k2":
        params = SpectralParams(config.epsilon, config.max_iterations)
        return lambda: spectral.run_k2(g, params)
    if config.kernel == "k3":
        params = CoalesceParams(config.gamma, config.seed)
        return lambda: coalesce.run_k3(g, params)
    if config.kernel == "k4":
        params = MetricParams(config.samples, config.seed)
        return lambda: metric.run_k4(g, params)
    params = OptimizeParams(config.alpha, config.max_iterations)
    return lambda: optimize.run_k5(g, params)


def _parameters(config: RunConfig) -> tuple[dict, dict]:
    if config.kernel == "k1":
        return {"source": config.source}, {}
    if config.kernel == "k2":
        return {"epsilon": config.epsilon,
                "max_iterations": config.max_iterations}, {}
    if config.kernel == "k3":
        return {"gamma": config.gamma, "seed": config.seed}, {"selection": config.seed}
    if config.kernel == "k4":
        return {"samples": config.samples, "seed": config.seed}, {"sampling": config.seed}
    return {"alpha": config.alpha,
            "max_iterations": config.max_iterations}, {}


def run(config: RunConfig,
        _result_transform: Callable[[object], object] | None = None) -> KernelReport:
    """Execute one configured benchmark run and return its report.

    ``_result_transform`` is a test hook applied to the kernel result before
    rendering and verification (used to exercise the failure path); it is
    never set by the CLI.
    """
    config.check()
    g = load_graph(config.graph_path, config.representation)
    kernel_fn = _kernel_callable(g, config)

    for _ in range(config.warmup):
        kernel_fn()
    timings: list[int] = []
    result = None
    for _ in range(config.repetitions):
        start = time.perf_counter_ns()
        result = kernel_fn()
        timings.append(time.perf_counter_ns() - start)

    if _result_transform is not None:
        result = _result_transform(result)

    text = render_result(config.kernel, result)
    parameters, seeds = _parameters(config)
    summary = {"min": min(timings), "mean": statistics.fmean(timings),
               "max": max(timings)}
    verification = "skipped"
    if config.verify:
        verification = "passed" if _VERIFIERS[config.kernel](g, config, result) \
            else "failed"
    report = KernelReport(kernel=config.kernel,
                          parameters=parameters,
                          representation=config.representation,
                          graph=graph_stats(g),
                          repetitions=config.repetitions,
                          warmup=config.warmup,
                          timings_ns=timings,
                          timing_summary_ns=summary,
                          result_checksum=f"0x{checksum(text):016x}",
                          verification=verification,
                          seeds=seeds)
    if verification == "failed":
        raise OracleMismatchError(
            f"kernel {config.kernel} result does not match its oracle", report)
    return report


def emit_report(report: KernelReport) -> str:
    """Single JSON object, keys sorted, exactly one trailing newline."""
    return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
