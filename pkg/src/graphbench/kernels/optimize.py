"""Kernel 5: greedy group splitting driven by an entropy-of-density objective.

Work happens on the color-filtered induced subgraph: vertices whose color
exceeds alpha, and the directed entries with both endpoints surviving.
Starting from the single group holding every filtered vertex, each outer
iteration removes the group with the lowest density (ties to the group
containing the smallest id) and sweeps its members in ascending id order,
tentatively moving each into a fresh group and keeping the move only when
the whole-partition objective strictly decreases.  An outer iteration that
accepts nothing ends the kernel; otherwise both halves rejoin the partition
and the group count grows by one.

A group's density is the internal fraction of its incident directed
entries, |internal| / (|internal| + |boundary|), taken as 0 for an isolated
group, so it always lies in [0, 1] and feeds Shannon's binary entropy; the
objective is the sum of the groups' entropies, and lower is better.  Note a
structural consequence of filtering to an *induced* subgraph: the starting
single group has no boundary entries, so its objective is already the
global minimum of 0 and no split can be strictly improving.  The sweep
still evaluates every tentative move (that work is the kernel's payload),
but real inputs settle at one group, or zero when the filter empties V'.

Group counts are maintained incrementally under vertex moves; the dense
reference recomputation lives in the oracles module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ..core import Graph, GraphBenchError, InvalidParamsError

__all__ = [
    "EntropyDomainError",
    "OptimizeParams",
    "Partition",
    "DensityStats",
    "FilteredSubgraph",
    "K5Result",
    "filter_subgraph",
    "density",
    "entropy",
    "objective",
    "run_k5",
]


class EntropyDomainError(GraphBenchError):
    """entropy() argument outside [0, 1]."""


@dataclass(frozen=True)
class OptimizeParams:
    alpha: float
    max_iterations: int

    def check(self) -> None:
        if not (0.0 <= self.alpha <= 1.0):
            raise InvalidParamsError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.max_iterations < 0:
            raise InvalidParamsError(
                f"max_iterations must be >= 0, got {self.max_iterations}")


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty vertex groups covering the filtered vertex set."""

    groups: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.groups)


@dataclass(frozen=True)
class DensityStats:
    internal: int
    external: int
    d: float


@dataclass(frozen=True)
class FilteredSubgraph:
    """Vertices passing the color filter and their induced directed entries."""

    vertices: tuple[int, ...]
    entries: tuple[tuple[int, int, float], ...]


@dataclass
class K5Result:
    k: int
    partition: Partition
    objective: float
    evaluated_moves: int
    accepted_moves: int
    outer_iterations: int


def filter_subgraph(g: Graph, alpha: float) -> FilteredSubgraph:
    """Vertices with color strictly above alpha plus induced directed entries."""
    keep = [v for v in range(g.n) if g.colors[v] > alpha]
    kept = set(keep)
    entries = []
    for u in keep:
        for v, w in g.neighbors(u):
            if v in kept:
                entries.append((u, v, w))
    return FilteredSubgraph(vertices=tuple(keep), entries=tuple(entries))


def entropy(p: float) -> float:
    """Binary entropy with the 0*log(0) = 0 convention."""
    if not (0.0 <= p <= 1.0):
        raise EntropyDomainError(f"entropy argument {p!r} outside [0, 1]")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def density(group, entries) -> DensityStats:
    """Internal-fraction density of a vertex group against directed entries."""
    members = set(group)
    internal = 0
    external = 0
    for u, v, _ in entries:
        inside = (u in members) + (v in members)
        if inside == 2:
            internal += 1
        elif inside == 1:
            external += 1
    total = internal + external
    d = internal / total if total else 0.0
    return DensityStats(internal=internal, external=external, d=d)


def objective(partition, entries) -> float:
    """Sum of entropy(density(group)) over the groups of ``partition``."""
    groups = partition.groups if isinstance(partition, Partition) else partition
    total = 0.0
    for group in groups:
        total += entropy(density(group, entries).d)
    return total


def _term(internal: int, external: int) -> float:
    total = internal + external
    if total == 0:
        return 0.0
    return entropy(internal / total)


class _GroupState:
    """Mutable group with cached internal/external directed-entry counts."""

    __slots__ = ("members", "internal", "external")

    def __init__(self, members: set[int], internal: int, external: int):
        self.members = members
        self.internal = internal
        self.external = external

    def term(self) -> float:
        return _term(self.internal, self.external)

    def density(self) -> float:
        total = self.internal + self.external
        return self.internal / total if total else 0.0


def run_k5(g: Graph, params: OptimizeParams,
           observer: Callable[[tuple[frozenset[int], ...], float], None] | None = None,
           ) -> K5Result:
    """Greedy splitting of the filtered subgraph; returns the final group count.

    ``observer`` (if given) is invoked after every accepted move with the
    current groups and the incrementally maintained objective value.
    """
    params.check()
    sub = filter_subgraph(g, params.alpha)
    if not sub.vertices:
        return K5Result(k=0, partition=Partition(groups=()), objective=0.0,
                        evaluated_moves=0, accepted_moves=0, outer_iterations=0)

    # filtered adjacency; every entry u -> v has a mirror v -> u
    adj: dict[int, list[int]] = {v: [] for v in sub.vertices}
    for u, v, _ in sub.entries:
        adj[u].append(v)
    deg = {v: len(adj[v]) for v in sub.vertices}

    whole = _GroupState(set(sub.vertices), internal=len(sub.entries), external=0)
    groups: list[_GroupState] = [whole]
    evaluated = 0
    accepted = 0
    outer = 0
    stop = False

    while outer < params.max_iterations and not stop:
        gi = min(range(len(groups)),
                 key=lambda i: (groups[i].density(), min(groups[i].members)))
        gmin = groups.pop(gi)
        gnew = _GroupState(set(), 0, 0)
        others_sum = 0.0
        for other in groups:
            others_sum += other.term()
        current = others_sum + gmin.term() + gnew.term()

        for v in sorted(gmin.members):
            evaluated += 1
            dv = deg[v]
            in_min = 0
            in_new = 0
            for x in adj[v]:
                if x in gmin.members:
                    in_min += 1
                elif x in gnew.members:
                    in_new += 1
            min_internal = gmin.internal - 2 * in_min
            min_external = gmin.external + 4 * in_min - 2 * dv
            new_internal = gnew.internal + 2 * in_new
            new_external = gnew.external + 2 * dv - 4 * in_new
            candidate = (others_sum + _term(min_internal, min_external)
                         + _term(new_internal, new_external))
            if candidate < current:
                gmin.members.discard(v)
                gmin.internal = min_internal
                gmin.external = min_external
                gnew.members.add(v)
                gnew.internal = new_internal
                gnew.external = new_external
                current = candidate
                accepted += 1
                if observer is not None:
                    snap = tuple(frozenset(gr.members)
                                 for gr in (*groups, gmin, gnew) if gr.members)
                    observer(snap, current)

        if not gnew.members:
            groups.append(gmin)
            stop = True
        else:
            if gmin.members:
                groups.append(gmin)
            groups.append(gnew)
        outer += 1

    partition = Partition(groups=tuple(frozenset(gr.members) for gr in groups))
    final_objective = 0.0
    for gr in groups:
        final_objective += gr.term()
    return K5Result(k=len(groups), partition=partition,
                    objective=final_objective,
                    evaluated_moves=evaluated, accepted_moves=accepted,
                    outer_iterations=outer)
