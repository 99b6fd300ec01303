"""Brute-force reference implementations for verification.

Everything here is deliberately dense, exhaustive, and slow: these
functions define expected answers for the kernels and must stay independent
of the kernel code paths (they share only the graph containers).  A size
guard rejects inputs past 4096 vertices so a mistyped benchmark run cannot
sit in an O(n^2) loop for hours.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Graph, GraphBenchError

__all__ = [
    "SizeGuardError",
    "MAX_ORACLE_VERTICES",
    "DenseMatrix",
    "dense_matrix",
    "oracle_dijkstra",
    "oracle_power_step",
    "oracle_cc",
    "oracle_objective",
    "directed_pair_set",
]

MAX_ORACLE_VERTICES = 4096

INF = float("inf")


class SizeGuardError(GraphBenchError):
    """Oracle input exceeds the size guard."""


def _guard(n: int) -> None:
    if n > MAX_ORACLE_VERTICES:
        raise SizeGuardError(f"oracle size guard: n={n} > {MAX_ORACLE_VERTICES}")


@dataclass
class DenseMatrix:
    """Dense n*n weight matrix of the directed expansion.

    ``present`` disambiguates a genuine zero-weight entry from an absent
    one; ``weights[i][j]`` is 0.0 wherever ``present[i][j]`` is False.
    """

    n: int
    weights: list[list[float]]
    present: list[list[bool]]


def dense_matrix(g: Graph) -> DenseMatrix:
    _guard(g.n)
    n = g.n
    weights = [[0.0] * n for _ in range(n)]
    present = [[False] * n for _ in range(n)]
    for i in range(n):
        for j, w in g.neighbors(i):
            weights[i][j] = w
            present[i][j] = True
    return DenseMatrix(n=n, weights=weights, present=present)


def oracle_dijkstra(g: Graph, source: int) -> list[float]:
    """Array-scan shortest paths: settle order is (distance, id) ascending."""
    _guard(g.n)
    n = g.n
    mat = dense_matrix(g)
    dist = [INF] * n
    dist[source] = 0.0
    done = [False] * n
    for _ in range(n):
        best = -1
        best_d = INF
        for v in range(n):
            if not done[v] and dist[v] < best_d:
                best = v
                best_d = dist[v]
        if best < 0:
            break  # remaining vertices unreachable
        done[best] = True
        row_w = mat.weights[best]
        row_p = mat.present[best]
        base = dist[best]
        for v in range(n):
            if row_p[v] and not done[v]:
                cand = base + row_w[v]
                if cand < dist[v]:
                    dist[v] = cand
    return dist


def oracle_power_step(mat: DenseMatrix, x: list[float]) -> list[float]:
    """One dense product y = M x, columns swept in ascending order."""
    n = mat.n
    if len(x) != n:
        raise GraphBenchError(f"vector length {len(x)} != n {n}")
    y = [0.0] * n
    for i in range(n):
        row = mat.weights[i]
        acc = 0.0
        for j in range(n):
            acc += row[j] * x[j]
        y[i] = acc
    return y


def directed_pair_set(g: Graph) -> set[tuple[int, int]]:
    """All directed entries (u, v) of the graph, for adjacency tests."""
    _guard(g.n)
    pairs = set()
    for u in range(g.n):
        for v, _ in g.neighbors(u):
            pairs.add((u, v))
    return pairs


def oracle_cc(g: Graph, u: int, pairs: set[tuple[int, int]] | None = None) -> float:
    """Clustering coefficient by testing every ordered neighbor pair.

    ``pairs`` may carry a precomputed ``directed_pair_set`` to amortize
    repeated calls on one graph; the counting itself stays exhaustive.
    """
    _guard(g.n)
    if pairs is None:
        pairs = directed_pair_set(g)
    nbrs = [v for v, _ in g.neighbors(u)]
    size = len(nbrs)
    if size <= 1:
        return 0.0
    count = 0
    for a in nbrs:
        for b in nbrs:
            if a != b and (a, b) in pairs:
                count += 1
    return count / (size * (size - 1))


def oracle_objective(groups, entries) -> float:
    """Entropy objective recomputed from scratch for every group."""
    total = 0.0
    for group in groups:
        members = set(group)
        internal = 0
        external = 0
        for u, v, *_ in entries:
            inside = (u in members) + (v in members)
            if inside == 2:
                internal += 1
            elif inside == 1:
                external += 1
        denom = internal + external
        p = internal / denom if denom else 0.0
        if 0.0 < p < 1.0:
            total += -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)
    return total
