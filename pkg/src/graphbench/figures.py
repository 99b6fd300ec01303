"""Figure rendering for reports and graph inspection.

Figures are written straight to files (Agg backend, no display) next to the
delimited result output: per-repetition wall times for a benchmark run, and
the log-log degree distribution that makes the scale-free tail visible.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .core import Graph
from .harness import KernelReport

__all__ = ["save_timing_figure", "save_degree_figure"]


def save_timing_figure(report: KernelReport, path: str | Path) -> None:
    """Bar chart of per-repetition wall times with the mean marked."""
    times_ms = [t / 1e6 for t in report.timings_ns]
    mean_ms = report.timing_summary_ns["mean"] / 1e6
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.bar(range(1, len(times_ms) + 1), times_ms, color="#4878cf")
    ax.axhline(mean_ms, color="#d65f5f", linewidth=1.2,
               label=f"mean {mean_ms:.3f} ms")
    ax.set_xlabel("repetition")
    ax.set_ylabel("wall time (ms)")
    ax.set_title(f"{report.kernel} on n={report.graph['n']} "
                 f"({report.representation})")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_degree_figure(g: Graph, path: str | Path) -> None:
    """Log-log scatter of the degree distribution."""
    counts = Counter(g.degree(u) for u in range(g.n))
    degrees = sorted(d for d in counts if d > 0)
    freq = [counts[d] for d in degrees]
    fig, ax = plt.subplots(figsize=(4.8, 3.6))
    if degrees:
        ax.loglog(degrees, freq, marker="o", linestyle="none",
                  markersize=3, color="#4878cf")
    ax.set_xlabel("degree")
    ax.set_ylabel("vertex count")
    ax.set_title(f"degree distribution, n={g.n}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
