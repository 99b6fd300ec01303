"""Kernel 2: dominant eigenvector by power iteration with L1 normalization.

The iterate starts uniform (every entry 1/n) and repeats x <- Ax, x <- x/|x|
until the relative L1 change theta of successive normalized iterates drops
to the threshold or the iteration cap is reached.  The per-row weight sums C
are computed up front and carried in the result; the iteration itself never
reads them, mirroring the kernel definition exactly.

The sparse product accumulates per-row in the representation's stored
neighbor order (ascending ids for both containers), so CSR and
adjacency-list runs agree bitwise, as does a dense reference that sweeps
columns in ascending order (absent entries contribute exact +0.0 terms).
The kernel never materializes a dense matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Graph, GraphBenchError, InvalidParamsError

__all__ = [
    "DimensionMismatchError",
    "ZeroVectorError",
    "SpectralParams",
    "SpectralResult",
    "row_sums",
    "matvec",
    "run_k2",
]

INF = float("inf")


class DimensionMismatchError(GraphBenchError):
    """Vector length does not match the vertex count."""


class ZeroVectorError(GraphBenchError):
    """An iterate collapsed to the zero vector (all-zero weights)."""


@dataclass(frozen=True)
class SpectralParams:
    epsilon: float
    max_iterations: int

    def check(self) -> None:
        if not self.epsilon > 0.0:
            raise InvalidParamsError(f"epsilon must be > 0, got {self.epsilon}")
        if self.max_iterations < 0:
            raise InvalidParamsError(
                f"max_iterations must be >= 0, got {self.max_iterations}")


@dataclass
class SpectralResult:
    """Final normalized iterate plus convergence bookkeeping."""

    x: list[float]
    iterations: int
    theta: float
    row_sums: list[float]


def row_sums(g: Graph) -> list[float]:
    """Per-vertex sum of outgoing entry weights."""
    out = [0.0] * g.n
    for i in range(g.n):
        acc = 0.0
        for _, w in g.neighbors(i):
            acc += w
        out[i] = acc
    return out


def matvec(g: Graph, x: list[float]) -> list[float]:
    """Sparse product y[i] = sum over entries (i -> j, w) of w * x[j]."""
    n = g.n
    if len(x) != n:
        raise DimensionMismatchError(f"vector length {len(x)} != n {n}")
    y = [0.0] * n
    for i in range(n):
        acc = 0.0
        for j, w in g.neighbors(i):
            acc += w * x[j]
        y[i] = acc
    return y


def run_k2(g: Graph, params: SpectralParams) -> SpectralResult:
    """Power iteration until theta <= epsilon or the iteration cap."""
    params.check()
    n = g.n
    sums = row_sums(g)
    x = [1.0 / n] * n if n else []
    theta = INF
    t = 0
    while t < params.max_iterations and theta > params.epsilon:
        y = matvec(g, x)
        norm = 0.0
        for v in y:
            norm += abs(v)
        if norm == 0.0:
            raise ZeroVectorError(
                f"iterate {t + 1} has zero L1 norm; all edge weights are zero")
        x_next = [v / norm for v in y]
        diff = 0.0
        for a, b in zip(x_next, x):
            diff += abs(a - b)
        prev_norm = 0.0
        for v in x:
            prev_norm += abs(v)
        theta = diff / prev_norm
        x = x_next
        t += 1
    return SpectralResult(x=x, iterations=t, theta=theta, row_sums=sums)
