"""Graph model shared by every kernel.

An abstract graph here is undirected, weighted, and colored: vertices are
dense integer ids 0..n-1, each vertex carries a grayscale color in [0, 1],
each edge carries a weight in [0, 1], and there are no self-loops or
parallel edges.  Internally every undirected edge is stored as two directed
entries of equal weight (the directed expansion), so the two concrete
containers below expose per-vertex *directed* neighbor sequences.

Two containers are provided on purpose, with very different memory access
patterns:

``CsrGraph``
    Compressed sparse row: an offset array indexing contiguous slices of
    flat neighbor/weight arrays.  Sequential, cache-friendly traversal.

``AdjListGraph``
    One individually allocated linked node per directed entry, reached by
    reference-following.  Deliberately pointer-chasing; do not "optimize"
    it into contiguous storage, the random-access behavior is the point.

Both containers are immutable by convention after construction and safe to
share across concurrent readers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "GraphBenchError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EndpointRangeError",
    "ColorRangeError",
    "WeightRangeError",
    "InvalidParamsError",
    "CsrGraph",
    "AdjListGraph",
    "AdjNode",
    "Graph",
    "GraphSnapshot",
    "Violation",
    "ValidationReport",
    "build_csr",
    "build_adjlist",
    "neighbors",
    "validate",
    "graphs_equal",
    "snapshot",
    "restore",
    "to_csr",
    "to_adjlist",
]


class GraphBenchError(Exception):
    """Base class for every error raised by this package."""


class SelfLoopError(GraphBenchError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphBenchError):
    """More than one edge between the same unordered vertex pair."""


class EndpointRangeError(GraphBenchError):
    """A vertex id is outside 0..n-1."""


class ColorRangeError(GraphBenchError):
    """A vertex color is outside [0, 1]."""


class WeightRangeError(GraphBenchError):
    """An edge weight is outside [0, 1]."""


class InvalidParamsError(GraphBenchError):
    """Operation parameters violate their documented invariants."""


EdgeTriple = tuple[int, int, float]


def _same_float(a: float, b: float) -> bool:
    # Exact value equality that still separates +0.0 from -0.0, so equality
    # agrees with the canonical text rendering.
    if a != b:
        return False
    if a == 0.0:
        return math.copysign(1.0, a) == math.copysign(1.0, b)
    return True


def _canonical_edges(n: int, edges: Iterable[EdgeTriple]) -> list[EdgeTriple]:
    """Normalize, range-check, and sort an edge collection.

    Returns triples (u, v, w) with u < v, sorted lexicographically.
    """
    seen: dict[tuple[int, int], float] = {}
    for u, v, w in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise EndpointRangeError(f"edge ({u}, {v}) endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0.0 <= w <= 1.0):
            raise WeightRangeError(f"edge ({u}, {v}) weight {w!r} outside [0, 1]")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen[key] = w
    return [(u, v, seen[(u, v)]) for u, v in sorted(seen)]


def _check_colors(n: int, colors: Iterable[float]) -> list[float]:
    out = list(colors)
    if len(out) != n:
        raise InvalidParamsError(f"expected {n} colors, got {len(out)}")
    for i, c in enumerate(out):
        if not (0.0 <= c <= 1.0):
            raise ColorRangeError(f"vertex {i} color {c!r} outside [0, 1]")
    return out


# ---------------------------------------------------------------------------
# Concrete representations
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class CsrGraph:
    """Compressed-sparse-row storage of the directed expansion.

    ``adjacency`` has n+1 offsets; the directed entries out of vertex u are
    ``edge_list[adjacency[u]:adjacency[u+1]]`` with parallel weights in
    ``edge_weights``.  The trailing offset marks the boundary of the last
    vertex's slice.  Within a slice neighbors are sorted ascending by id.
    """

    n: int
    colors: list[float]
    adjacency: list[int]
    edge_list: list[int]
    edge_weights: list[float]

    def neighbors(self, u: int) -> Iterator[tuple[int, float]]:
        """Yield (neighbor, weight) for the directed entries out of u."""
        if not (0 <= u < self.n):
            raise EndpointRangeError(f"vertex {u} outside 0..{self.n - 1}")
        el = self.edge_list
        ew = self.edge_weights
        for i in range(self.adjacency[u], self.adjacency[u + 1]):
            yield el[i], ew[i]

    def degree(self, u: int) -> int:
        if not (0 <= u < self.n):
            raise EndpointRangeError(f"vertex {u} outside 0..{self.n - 1}")
        return self.adjacency[u + 1] - self.adjacency[u]

    def directed_entries(self) -> Iterator[EdgeTriple]:
        for u in range(self.n):
            for i in range(self.adjacency[u], self.adjacency[u + 1]):
                yield u, self.edge_list[i], self.edge_weights[i]

    def undirected_edges(self) -> list[EdgeTriple]:
        """Canonical (u, v, w) triples with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            for i in range(self.adjacency[u], self.adjacency[u + 1]):
                v = self.edge_list[i]
                if u < v:
                    out.append((u, v, self.edge_weights[i]))
        return out

    def undirected_edge_count(self) -> int:
        return len(self.edge_list) // 2


class AdjNode:
    """One directed entry in an adjacency chain."""

    __slots__ = ("vertex", "weight", "next")

    def __init__(self, vertex: int, weight: float):
        self.vertex = vertex
        self.weight = weight
        self.next: AdjNode | None = None


@dataclass(eq=False)
class AdjListGraph:
    """Per-vertex linked chains of directed entries.

    Every entry is its own heap-allocated node; iterating a vertex's
    neighborhood chases one reference per edge.
    """

    n: int
    colors: list[float]
    heads: list[AdjNode | None]

    def neighbors(self, u: int) -> Iterator[tuple[int, float]]:
        if not (0 <= u < self.n):
            raise EndpointRangeError(f"vertex {u} outside 0..{self.n - 1}")
        node = self.heads[u]
        while node is not None:
            yield node.vertex, node.weight
            node = node.next

    def degree(self, u: int) -> int:
        if not (0 <= u < self.n):
            raise EndpointRangeError(f"vertex {u} outside 0..{self.n - 1}")
        d = 0
        node = self.heads[u]
        while node is not None:
            d += 1
            node = node.next
        return d

    def directed_entries(self) -> Iterator[EdgeTriple]:
        for u in range(self.n):
            node = self.heads[u]
            while node is not None:
                yield u, node.vertex, node.weight
                node = node.next

    def undirected_edges(self) -> list[EdgeTriple]:
        out = []
        for u, v, w in self.directed_entries():
            if u < v:
                out.append((u, v, w))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def undirected_edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2


Graph = CsrGraph | AdjListGraph


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build_csr(n: int, colors: Iterable[float], edges: Iterable[EdgeTriple]) -> CsrGraph:
    """Build a CsrGraph from an undirected edge collection.

    Each undirected edge becomes two directed entries of equal weight; within
    each vertex's slice neighbors appear in ascending id order.
    """
    cols = _check_colors(n, colors)
    canon = _canonical_edges(n, edges)
    deg = [0] * n
    for u, v, _ in canon:
        deg[u] += 1
        deg[v] += 1
    adjacency = [0] * (n + 1)
    for i in range(n):
        adjacency[i + 1] = adjacency[i] + deg[i]
    edge_list = [0] * (2 * len(canon))
    edge_weights = [0.0] * (2 * len(canon))
    cursor = adjacency[:n]
    # Lexicographic iteration over canonical edges fills every slice in
    # ascending neighbor order (smaller-id neighbors land first).
    for u, v, w in canon:
        i = cursor[u]
        edge_list[i] = v
        edge_weights[i] = w
        cursor[u] = i + 1
        j = cursor[v]
        edge_list[j] = u
        edge_weights[j] = w
        cursor[v] = j + 1
    return CsrGraph(n=n, colors=cols, adjacency=adjacency,
                    edge_list=edge_list, edge_weights=edge_weights)


def build_adjlist(n: int, colors: Iterable[float], edges: Iterable[EdgeTriple]) -> AdjListGraph:
    """Build an AdjListGraph; chains are appended in canonical edge order."""
    cols = _check_colors(n, colors)
    canon = _canonical_edges(n, edges)
    heads: list[AdjNode | None] = [None] * n
    tails: list[AdjNode | None] = [None] * n

    def append(u: int, v: int, w: float) -> None:
        node = AdjNode(v, w)
        if tails[u] is None:
            heads[u] = node
        else:
            tails[u].next = node
        tails[u] = node

    for u, v, w in canon:
        append(u, v, w)
        append(v, u, w)
    return AdjListGraph(n=n, colors=cols, heads=heads)


def neighbors(g: Graph, u: int) -> Iterator[tuple[int, float]]:
    """Directed entries out of u, in the representation's stored order."""
    return g.neighbors(u)


def to_csr(g: Graph) -> CsrGraph:
    return build_csr(g.n, list(g.colors), g.undirected_edges())


def to_adjlist(g: Graph) -> AdjListGraph:
    return build_adjlist(g.n, list(g.colors), g.undirected_edges())


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


def _validate_common(n: int, colors: list[float], entries: list[EdgeTriple],
                     out: list[Violation]) -> None:
    if len(colors) != n:
        out.append(Violation("LengthMismatch",
                             f"{len(colors)} colors for {n} vertices"))
    else:
        for i, c in enumerate(colors):
            if not (0.0 <= c <= 1.0):
                out.append(Violation("ColorOutOfRange", f"vertex {i}: {c!r}"))
    directed: dict[tuple[int, int], float] = {}
    for u, v, w in entries:
        if not (0 <= v < n):
            out.append(Violation("EndpointOutOfRange", f"entry ({u} -> {v})"))
            continue
        if u == v:
            out.append(Violation("SelfLoop", f"vertex {u}"))
            continue
        if not (0.0 <= w <= 1.0):
            out.append(Violation("WeightOutOfRange", f"entry ({u} -> {v}): {w!r}"))
        if (u, v) in directed:
            out.append(Violation("DuplicateEdge", f"entry ({u} -> {v})"))
        else:
            directed[(u, v)] = w
    for (u, v), w in directed.items():
        back = directed.get((v, u))
        if back is None or not _same_float(back, w):
            out.append(Violation("AsymmetricEdge",
                                 f"({u} -> {v}, {w!r}) has no equal reverse entry"))


def validate(g: Graph) -> ValidationReport:
    """Report every violated structural invariant; empty report means well-formed.

    Violations are data, not exceptions: this function accepts arbitrarily
    mangled hand-built containers without raising.
    """
    out: list[Violation] = []
    if isinstance(g, CsrGraph):
        n = g.n
        if len(g.adjacency) != n + 1:
            out.append(Violation("OffsetMismatch",
                                 f"adjacency length {len(g.adjacency)} != n+1"))
            return ValidationReport(tuple(out))
        if n >= 0 and g.adjacency[0] != 0:
            out.append(Violation("OffsetMismatch", "adjacency[0] != 0"))
        if g.adjacency[n] != len(g.edge_list):
            out.append(Violation("OffsetMismatch",
                                 f"adjacency[n]={g.adjacency[n]} != edge_list length {len(g.edge_list)}"))
        for i in range(n):
            if g.adjacency[i] > g.adjacency[i + 1]:
                out.append(Violation("OffsetMismatch",
                                     f"adjacency decreases at {i}"))
        if len(g.edge_weights) != len(g.edge_list):
            out.append(Violation("LengthMismatch",
                                 "edge_weights length != edge_list length"))
        if out:
            # Offsets unusable; entry-level checks would misfire.
            _validate_common(n, g.colors, [], out)
            return ValidationReport(tuple(out))
        entries = list(g.directed_entries())
        _validate_common(n, g.colors, entries, out)
        # Canonical slice order is part of the representation contract.
        for u in range(n):
            slice_ = g.edge_list[g.adjacency[u]:g.adjacency[u + 1]]
            if any(a >= b for a, b in zip(slice_, slice_[1:])):
                out.append(Violation("UnsortedSlice", f"vertex {u}"))
    else:
        n = g.n
        if len(g.heads) != n:
            out.append(Violation("LengthMismatch",
                                 f"{len(g.heads)} adjacency chains for {n} vertices"))
            _validate_common(n, g.colors, [], out)
            return ValidationReport(tuple(out))
        entries = []
        for u in range(n):
            node = g.heads[u]
            steps = 0
            while node is not None:
                entries.append((u, node.vertex, node.weight))
                node = node.next
                steps += 1
                if steps > n:  # a simple graph cannot have n entries per vertex
                    out.append(Violation("ChainOverflow",
                                         f"vertex {u} chain exceeds {n} nodes"))
                    break
        _validate_common(n, g.colors, entries, out)
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# Equality, snapshots
# ---------------------------------------------------------------------------


def graphs_equal(a: Graph, b: Graph) -> bool:
    """Representation-agnostic exact equality.

    True iff vertex counts, every color, and the undirected edge-triple sets
    (with exact weights) match.
    """
    if a.n != b.n:
        return False
    if len(a.colors) != len(b.colors):
        return False
    for ca, cb in zip(a.colors, b.colors):
        if not _same_float(ca, cb):
            return False
    ea = a.undirected_edges()
    eb = b.undirected_edges()
    if len(ea) != len(eb):
        return False
    for (ua, va, wa), (ub, vb, wb) in zip(ea, eb):
        if ua != ub or va != vb or not _same_float(wa, wb):
            return False
    return True


@dataclass(frozen=True)
class GraphSnapshot:
    """Immutable deep copy of a graph's full abstract state."""

    kind: str  # "csr" | "adj"
    n: int
    colors: tuple[float, ...]
    edges: tuple[EdgeTriple, ...]


def snapshot(g: Graph) -> GraphSnapshot:
    kind = "csr" if isinstance(g, CsrGraph) else "adj"
    return GraphSnapshot(kind=kind, n=g.n, colors=tuple(g.colors),
                         edges=tuple(g.undirected_edges()))


def restore(s: GraphSnapshot) -> Graph:
    """Rebuild a graph equal (under ``graphs_equal``) to the snapshotted one."""
    if s.kind == "csr":
        return build_csr(s.n, list(s.colors), s.edges)
    return build_adjlist(s.n, list(s.colors), s.edges)
