from __future__ import annotations

import random
import time

import pytest

from graphbench import GeneratorParams, build_adjlist, build_csr, generate


def make_generated(n, seed, avg_degree=8, clique_size=5):
    return generate(GeneratorParams(n=n, avg_degree=avg_degree,
                                    clique_size=clique_size, seed=seed))


def gen_graph(n, seed, avg_degree=8, clique_size=5, representation="csr"):
    """Generated scale-free graph built as the requested representation."""
    r = make_generated(n, seed, avg_degree, clique_size)
    builder = build_csr if representation == "csr" else build_adjlist
    return builder(r.n, r.colors, r.edges)


def random_graph(rng: random.Random, n: int, edge_prob: float = 0.1):
    """Arbitrary valid graph (not scale-free) for format/round-trip tests."""
    colors = [rng.random() for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.append((u, v, rng.random()))
    return build_csr(n, colors, edges)


@pytest.fixture(scope="session")
def big_generation():
    """The n=1e5 reference generation, shared across tests; (result, seconds)."""
    start = time.perf_counter()
    result = make_generated(100_000, seed=42)
    elapsed = time.perf_counter() - start
    return result, elapsed


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[ACCEPTANCE] {name}: {status}", flush=True)
