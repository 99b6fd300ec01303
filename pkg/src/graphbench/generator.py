"""Sequential preferential-attachment generator for scale-free graphs.

Construction starts from a clique of ``clique_size`` vertices (the future
hubs) and then adds one vertex at a time.  Each new vertex u draws a target
degree d uniformly from {1, ..., 2*avg_degree} and attaches d times to
endpoints sampled uniformly from the growing endpoint list L, which holds
both endpoints of every accepted edge.  Since a vertex occurs in L once per
incident edge, sampling from L is sampling proportional to degree, in
constant time per edge.

Draw order is fixed so graphs are bit-identical across runs and platforms:
clique edge weights in lexicographic (u, v) order, then clique colors in id
order; then per new vertex u: color, degree d, and for each of the d
attachments the endpoint index followed (on acceptance) by the edge weight.
A sampled endpoint equal to u or duplicating an existing edge is resampled
up to 64 times; if the initial draw and all 64 retries fail the attachment
is skipped and appends nothing to L.  Only accepted edges consume a weight
draw.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InvalidParamsError
from .prng import UniformStream

__all__ = ["GeneratorParams", "GenerationResult", "generate"]

RESAMPLE_RETRIES = 64


@dataclass(frozen=True)
class GeneratorParams:
    """Generation inputs: target size, mean degree, seed clique, PRNG seed."""

    n: int
    avg_degree: int
    clique_size: int
    seed: int

    def check(self) -> None:
        if self.clique_size < 2:
            raise InvalidParamsError(f"clique_size must be >= 2, got {self.clique_size}")
        if self.n < self.clique_size:
            raise InvalidParamsError(
                f"n ({self.n}) must be >= clique_size ({self.clique_size})")
        if self.avg_degree < 1:
            raise InvalidParamsError(f"avg_degree must be >= 1, got {self.avg_degree}")


@dataclass
class GenerationResult:
    """Raw generator output plus bookkeeping used by tests and reports.

    ``edges`` holds canonical (u, v, w) triples with u < v in creation
    order; ``endpoint_list`` is the final attachment list L, in which each
    vertex occurs exactly degree-many times.
    """

    n: int
    colors: list[float]
    edges: list[tuple[int, int, float]]
    endpoint_list: list[int]
    attachments_attempted: int
    attachments_skipped: int

    @property
    def skip_rate(self) -> float:
        if self.attachments_attempted == 0:
            return 0.0
        return self.attachments_skipped / self.attachments_attempted

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def generate(params: GeneratorParams) -> GenerationResult:
    """Generate a scale-free graph; deterministic in ``params``.

    The hot loop keeps plain locals and a single packed-key edge set
    (min_id * n + max_id) so the n=1e5 reference configuration finishes in
    seconds; the draw stream is pinned against the scalar Prng by tests.
    """
    params.check()
    n, c = params.n, params.clique_size
    two_d = 2 * params.avg_degree
    max_tries = 1 + RESAMPLE_RETRIES
    stream = UniformStream(params.seed)
    stream._refill()
    buf = stream._buf
    pos = 0
    nbuf = len(buf)

    edges: list[tuple[int, int, float]] = []
    seen: set[int] = set()
    endpoints: list[int] = []
    colors = [0.0] * n

    # seed clique, weights in lexicographic (u, v) order
    for u in range(c):
        for v in range(u + 1, c):
            if pos >= nbuf:
                stream._refill(); buf = stream._buf; pos = 0
            edges.append((u, v, buf[pos]))
            pos += 1
            seen.add(u * n + v)
            endpoints.append(u)
            endpoints.append(v)
    for u in range(c):
        if pos >= nbuf:
            stream._refill(); buf = stream._buf; pos = 0
        colors[u] = buf[pos]
        pos += 1

    attempted = 0
    skipped = 0
    for u in range(c, n):
        if pos + 2 > nbuf:
            stream._refill(); buf = stream._buf; pos = 0
        colors[u] = buf[pos]
        d = int(buf[pos + 1] * two_d) + 1
        pos += 2
        len_l = len(endpoints)
        base = u * n
        for _ in range(d):
            attempted += 1
            v = -1
            tries = 0
            while tries < max_tries:
                tries += 1
                if pos >= nbuf:
                    stream._refill(); buf = stream._buf; pos = 0
                cand = endpoints[int(buf[pos] * len_l)]
                pos += 1
                if cand != u and (cand * n + u if cand < u
                                  else base + cand) not in seen:
                    v = cand
                    break
            if v < 0:
                skipped += 1
                continue
            if pos >= nbuf:
                stream._refill(); buf = stream._buf; pos = 0
            w = buf[pos]
            pos += 1
            if u < v:
                edges.append((u, v, w))
                seen.add(base + v)
            else:
                edges.append((v, u, w))
                seen.add(v * n + u)
            endpoints.append(u)
            endpoints.append(v)
            len_l += 2

    # keep the stream object consistent in case a caller drains it further
    stream._pos = pos
    return GenerationResult(n=n, colors=colors, edges=edges,
                            endpoint_list=endpoints,
                            attachments_attempted=attempted,
                            attachments_skipped=skipped)
