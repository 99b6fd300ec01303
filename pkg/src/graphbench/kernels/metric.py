"""Kernel 4: clustering coefficients of randomly sampled vertices.

For a vertex u with neighbor set S, the coefficient is the number of
directed entries running between members of S divided by |S| * (|S| - 1),
the number of ordered neighbor pairs.  Both directions of an undirected
edge count, matching the directed expansion the containers store.  Vertices
of degree 0 or 1 have no neighbor pairs; their coefficient is defined as 0
so the value always lies in [0, 1].

Sampling draws ``samples`` vertices independently (repeats allowed, each
producing its own table entry).  Membership tests against S use a sorted
id array with binary search.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from ..core import EndpointRangeError, Graph, InvalidParamsError
from ..prng import Prng

__all__ = ["MetricParams", "clustering_coefficient", "run_k4"]


@dataclass(frozen=True)
class MetricParams:
    samples: int
    seed: int

    def check(self) -> None:
        if self.samples < 0:
            raise InvalidParamsError(f"samples must be >= 0, got {self.samples}")


def clustering_coefficient(g: Graph, u: int) -> float:
    """Fraction of ordered neighbor pairs of u that are adjacent."""
    if not (0 <= u < g.n):
        raise EndpointRangeError(f"vertex {u} outside 0..{g.n - 1}")
    members = sorted(v for v, _ in g.neighbors(u))
    size = len(members)
    if size <= 1:
        return 0.0
    count = 0
    for v in members:
        for vp, _ in g.neighbors(v):
            i = bisect_left(members, vp)
            if i < size and members[i] == vp:
                count += 1
    return count / (size * (size - 1))


def run_k4(g: Graph, params: MetricParams) -> list[tuple[int, float]]:
    """Coefficient table for ``samples`` uniformly drawn vertices, in draw order."""
    params.check()
    prng = Prng(params.seed)
    table = []
    for _ in range(params.samples):
        u = prng.uniform_int(g.n)
        table.append((u, clustering_coefficient(g, u)))
    return table
