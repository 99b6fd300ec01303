"""Kernel 3: repeated neighborhood coalescing into mega-vertices.

Each step picks a vertex u uniformly at random among the surviving
vertices, collapses S = {u} plus u's current neighbors into a single
mega-vertex whose color is the mean of the members' colors, rewires every
edge with exactly one endpoint in S to the mega-vertex, and drops edges
internal to S.  Where two members of S reached the same outside vertex, the
merged edge keeps the maximum of the weights (order-independent, so the
result is deterministic).  The mega-vertex takes the smallest id in S and
surviving ids stay dense by compacting the holes, preserving relative
order.

The number of steps is floor(gamma * original vertex count), stopping early
once a single vertex remains.  The kernel mutates only a private working
copy; the input graph is untouched and a pre-run snapshot is returned so
callers can verify bit-exact restoration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..core import (CsrGraph, Graph, GraphSnapshot, InvalidParamsError,
                    build_adjlist, build_csr, snapshot)
from ..prng import Prng

__all__ = ["CoalesceParams", "CoalesceResult", "CoalesceStep", "run_k3"]


@dataclass(frozen=True)
class CoalesceParams:
    gamma: float
    seed: int

    def check(self) -> None:
        if not (0.0 <= self.gamma <= 1.0):
            raise InvalidParamsError(f"gamma must be in [0, 1], got {self.gamma}")


@dataclass(frozen=True)
class CoalesceStep:
    """Per-step trace record handed to the observer callback."""

    index: int
    vertices_before: int
    vertices_after: int
    group_size: int
    merged_color: float
    member_colors: tuple[float, ...]


@dataclass
class CoalesceResult:
    coalesced: Graph
    coalescences_performed: int
    original: GraphSnapshot


def run_k3(g: Graph, params: CoalesceParams,
           observer: Callable[[CoalesceStep], None] | None = None,
           verify_intermediate: bool = False) -> CoalesceResult:
    """Coalesce floor(gamma * n) random neighborhoods of a working copy.

    ``observer`` (if given) is called once per performed step.  With
    ``verify_intermediate`` every intermediate state is rebuilt as a graph
    and structurally validated (slow; intended for tests on small inputs).
    """
    params.check()
    original = snapshot(g)
    steps_wanted = int(params.gamma * g.n)
    prng = Prng(params.seed)

    # private working copy: label -> {neighbor label: weight}
    adjacency: dict[int, dict[int, float]] = {}
    color: dict[int, float] = {}
    for u in range(g.n):
        adjacency[u] = dict(g.neighbors(u))
        color[u] = g.colors[u]
    alive = list(range(g.n))

    performed = 0
    for index in range(steps_wanted):
        if len(alive) <= 1:
            break
        u = alive[prng.uniform_int(len(alive))]
        group = {u} | set(adjacency[u])
        mega = min(group)
        members = sorted(group)
        member_colors = tuple(color[v] for v in members)
        color_sum = 0.0
        for v in member_colors:
            color_sum += v
        merged_color = color_sum / len(group)

        merged: dict[int, float] = {}
        for s in members:
            for x, w in adjacency[s].items():
                if x in group:
                    continue  # internal edges vanish with the group
                del adjacency[x][s]
                old = merged.get(x)
                if old is None or w > old:
                    merged[x] = w
            del adjacency[s]
            del color[s]
        adjacency[mega] = dict(merged)
        color[mega] = merged_color
        for x, w in merged.items():
            adjacency[x][mega] = w

        before = len(alive)
        alive = [v for v in alive if v == mega or v not in group]
        performed += 1

        if observer is not None:
            observer(CoalesceStep(index=index,
                                  vertices_before=before,
                                  vertices_after=len(alive),
                                  group_size=len(group),
                                  merged_color=merged_color,
                                  member_colors=member_colors))
        if verify_intermediate:
            report_graph = _build_output(g, alive, adjacency, color)
            from ..core import validate
            report = validate(report_graph)
            if not report.ok:
                raise AssertionError(
                    f"intermediate state invalid after step {index}: "
                    f"{report.violations[:3]}")

    coalesced = _build_output(g, alive, adjacency, color)
    return CoalesceResult(coalesced=coalesced,
                          coalescences_performed=performed,
                          original=original)


def _build_output(g: Graph, alive: list[int],
                  adjacency: dict[int, dict[int, float]],
                  color: dict[int, float]) -> Graph:
    # compact surviving labels to dense ids, preserving relative order
    rank = {label: i for i, label in enumerate(alive)}
    colors = [color[label] for label in alive]
    edges = []
    for label in alive:
        u = rank[label]
        for other, w in adjacency[label].items():
            v = rank[other]
            if u < v:
                edges.append((u, v, w))
    builder = build_csr if isinstance(g, CsrGraph) else build_adjlist
    return builder(len(alive), colors, edges)
