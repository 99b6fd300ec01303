"""Kernel 1: single-source shortest paths over an ordered frontier.

BFS-style expansion where the frontier is kept ordered by current path
length: repeatedly settle the queued vertex with the smallest tentative
distance (ties broken by smallest id), then relax its out-entries.  With
non-negative weights a settled label is final, so each vertex is settled at
most once and the result is the Dijkstra fixed point.  Unreachable vertices
keep the +infinity sentinel.

Distances are sums of 64-bit floats; because vertices are settled in
(distance, id) order and each relaxation is a single ``W[u] + w`` addition,
the output is bit-identical across graph representations and matches the
dense array-scan reference exactly.
"""

from __future__ import annotations

from ..core import EndpointRangeError, Graph, GraphBenchError

__all__ = ["EmptyQueueError", "FrontierQueue", "relax", "run_k1"]

INF = float("inf")


class EmptyQueueError(GraphBenchError):
    """extract_min on an empty frontier."""


class FrontierQueue:
    """Binary min-heap of (key, vertex) with a position index for key decrease.

    Extraction order is by smallest key, ties by smallest vertex id.
    """

    __slots__ = ("_heap", "_pos")

    def __init__(self):
        self._heap: list[tuple[float, int]] = []
        self._pos: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._heap)

    def __contains__(self, vertex: int) -> bool:
        return vertex in self._pos

    def insert(self, vertex: int, key: float) -> None:
        if vertex in self._pos:
            raise ValueError(f"vertex {vertex} already queued")
        self._heap.append((key, vertex))
        self._sift_up(len(self._heap) - 1)

    def decrease(self, vertex: int, key: float) -> None:
        i = self._pos[vertex]
        old_key, _ = self._heap[i]
        if key > old_key:
            raise ValueError(f"key increase for vertex {vertex}")
        self._heap[i] = (key, vertex)
        self._sift_up(i)

    def extract_min(self) -> int:
        """Remove and return the vertex with the smallest (key, id)."""
        if not self._heap:
            raise EmptyQueueError("extract_min on empty queue")
        top_key, top_vertex = self._heap[0]
        del self._pos[top_vertex]
        last = self._heap.pop()
        if self._heap:
            self._heap[0] = last
            self._pos[last[1]] = 0
            self._sift_down(0)
        return top_vertex

    def _sift_up(self, i: int) -> None:
        heap, pos = self._heap, self._pos
        item = heap[i]
        while i > 0:
            parent = (i - 1) >> 1
            if heap[parent] <= item:
                break
            heap[i] = heap[parent]
            pos[heap[i][1]] = i
            i = parent
        heap[i] = item
        pos[item[1]] = i

    def _sift_down(self, i: int) -> None:
        heap, pos = self._heap, self._pos
        size = len(heap)
        item = heap[i]
        while True:
            left = 2 * i + 1
            if left >= size:
                break
            child = left
            right = left + 1
            if right < size and heap[right] < heap[left]:
                child = right
            if item <= heap[child]:
                break
            heap[i] = heap[child]
            pos[heap[i][1]] = i
            i = child
        heap[i] = item
        pos[item[1]] = i


def relax(weights: list[float], u: int, v: int, w: float) -> bool:
    """Lower W[v] to W[u] + w if that improves it; return whether it did."""
    cand = weights[u] + w
    if cand < weights[v]:
        weights[v] = cand
        return True
    return False


def run_k1(g: Graph, source: int) -> list[float]:
    """Shortest path lengths from ``source`` to every vertex."""
    n = g.n
    if not (0 <= source < n):
        raise EndpointRangeError(f"source {source} outside 0..{n - 1}")
    weights = [INF] * n
    weights[source] = 0.0
    settled = bytearray(n)
    queue = FrontierQueue()
    queue.insert(source, 0.0)
    while len(queue):
        u = queue.extract_min()
        settled[u] = 1
        for v, w in g.neighbors(u):
            if settled[v]:
                continue
            improved = relax(weights, u, v, w)
            if v in queue:
                if improved:
                    queue.decrease(v, weights[v])
            else:
                queue.insert(v, weights[v])
    return weights
