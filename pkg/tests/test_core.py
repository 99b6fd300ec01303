from __future__ import annotations

import random

import pytest

from graphbench import (AdjListGraph, ColorRangeError, CsrGraph,
                        DuplicateEdgeError, EndpointRangeError, SelfLoopError,
                        WeightRangeError, build_adjlist, build_csr,
                        graphs_equal, neighbors, restore, snapshot,
                        to_adjlist, to_csr, validate)
from conftest import gen_graph, make_generated


def triangle(weights=(1.0, 1.0, 1.0), colors=(0.5, 0.5, 0.5)):
    return build_csr(3, list(colors),
                     [(0, 1, weights[0]), (0, 2, weights[1]), (1, 2, weights[2])])


def k4():
    edges = [(u, v, 0.5) for u in range(4) for v in range(u + 1, 4)]
    return build_csr(4, [0.1, 0.2, 0.3, 0.4], edges)


class TestBuildCsr:
    def test_single_vertex_no_edges(self):
        g = build_csr(1, [0.5], [])
        assert g.adjacency == [0, 0]
        assert g.edge_list == []
        assert g.edge_weights == []

    def test_single_edge_directed_expansion(self):
        g = build_csr(2, [0.0, 1.0], [(0, 1, 0.5)])
        assert g.adjacency == [0, 1, 2]
        assert g.edge_list == [1, 0]
        assert g.edge_weights == [0.5, 0.5]

    def test_triangle_offsets(self):
        g = triangle()
        assert g.adjacency == [0, 2, 4, 6]

    def test_slices_sorted_ascending(self):
        rng = random.Random(5)
        edges = [(3, 7, 0.1), (0, 7, 0.2), (2, 7, 0.3), (7, 9, 0.4), (1, 7, 0.5)]
        g = build_csr(10, [rng.random() for _ in range(10)], edges)
        slice7 = g.edge_list[g.adjacency[7]:g.adjacency[8]]
        assert slice7 == sorted(slice7) == [0, 1, 2, 3, 9]

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            build_csr(2, [0.0, 0.0], [(1, 1, 0.5)])

    def test_rejects_duplicate_even_reversed(self):
        with pytest.raises(DuplicateEdgeError):
            build_csr(2, [0.0, 0.0], [(0, 1, 0.5), (1, 0, 0.5)])

    def test_rejects_endpoint_out_of_range(self):
        with pytest.raises(EndpointRangeError):
            build_csr(2, [0.0, 0.0], [(0, 2, 0.5)])

    def test_rejects_bad_color_and_weight(self):
        with pytest.raises(ColorRangeError):
            build_csr(1, [1.5], [])
        with pytest.raises(WeightRangeError):
            build_csr(2, [0.0, 0.0], [(0, 1, -0.25)])


class TestAdjList:
    def test_empty(self):
        g = build_adjlist(1, [0.5], [])
        assert list(g.neighbors(0)) == []

    def test_single_edge(self):
        g = build_adjlist(2, [0.0, 1.0], [(0, 1, 0.5)])
        assert list(g.neighbors(0)) == [(1, 0.5)]
        assert list(g.neighbors(1)) == [(0, 0.5)]

    def test_node_per_edge_linked_structure(self):
        g = build_adjlist(3, [0.0] * 3, [(0, 1, 0.5), (0, 2, 0.25)])
        head = g.heads[0]
        assert head.vertex == 1 and head.next.vertex == 2
        assert head.next.next is None
        # nodes are distinct objects, one per directed entry
        assert head is not g.heads[1]

    def test_conversion_matches_direct_build(self):
        # to_csr(build_adjlist(G)) equals build_csr(G), via edge-triple sets
        rng = random.Random(64)
        n = 64
        colors = [rng.random() for _ in range(n)]
        edges = [(u, v, rng.random())
                 for u in range(n) for v in range(u + 1, n) if rng.random() < 0.1]
        via_adj = to_csr(build_adjlist(n, colors, edges))
        direct = build_csr(n, colors, edges)
        assert set(via_adj.undirected_edges()) == set(direct.undirected_edges())
        assert graphs_equal(via_adj, direct)


class TestNeighbors:
    def test_isolated_vertex(self):
        g = build_csr(2, [0.0, 0.0], [])
        assert list(neighbors(g, 0)) == []

    def test_triangle_neighbors(self):
        g = triangle(weights=(0.1, 0.2, 0.3))
        assert list(neighbors(g, 0)) == [(1, 0.1), (2, 0.2)]

    def test_out_of_range(self):
        g = triangle()
        with pytest.raises(EndpointRangeError):
            list(neighbors(g, 3))

    def test_degree_matches_input_edge_multiset(self):
        # degree(u) equals the number of input edges incident to u
        r = make_generated(150, seed=3)
        g = build_csr(r.n, r.colors, r.edges)
        expected = [0] * r.n
        for u, v, _ in r.edges:
            expected[u] += 1
            expected[v] += 1
        assert [g.degree(u) for u in range(g.n)] == expected
        assert all(len(list(g.neighbors(u))) == expected[u] for u in range(g.n))

    def test_csr_and_adjlist_agree(self):
        g = gen_graph(96, seed=8)
        ga = to_adjlist(g)
        for u in range(g.n):
            assert set(g.neighbors(u)) == set(ga.neighbors(u))


class TestValidate:
    def test_well_formed_k4(self):
        assert validate(k4()).ok

    def test_offset_mismatch(self):
        g = CsrGraph(n=2, colors=[0.0, 0.0], adjacency=[0, 1, 3],
                     edge_list=[1, 0], edge_weights=[0.5, 0.5])
        assert "OffsetMismatch" in validate(g).codes()

    def test_asymmetric_edge(self):
        g = CsrGraph(n=2, colors=[0.0, 0.0], adjacency=[0, 1, 1],
                     edge_list=[1], edge_weights=[0.5])
        assert "AsymmetricEdge" in validate(g).codes()

    def test_asymmetric_weight(self):
        g = CsrGraph(n=2, colors=[0.0, 0.0], adjacency=[0, 1, 2],
                     edge_list=[1, 0], edge_weights=[0.5, 0.25])
        assert "AsymmetricEdge" in validate(g).codes()

    def test_self_loop_and_duplicate_reported(self):
        g = CsrGraph(n=2, colors=[0.0, 0.0], adjacency=[0, 3, 4],
                     edge_list=[0, 1, 1, 0], edge_weights=[0.5] * 4)
        codes = validate(g).codes()
        assert "SelfLoop" in codes
        assert "DuplicateEdge" in codes

    def test_color_out_of_range_is_data_not_error(self):
        g = CsrGraph(n=1, colors=[2.0], adjacency=[0, 0],
                     edge_list=[], edge_weights=[])
        assert validate(g).codes() == {"ColorOutOfRange"}

    def test_generated_graphs_validate(self):
        for seed in (1, 2, 3):
            assert validate(gen_graph(128, seed)).ok


class TestEquality:
    def test_reflexive(self):
        g = k4()
        assert graphs_equal(g, g)

    def test_weight_change_detected(self):
        a = triangle(weights=(0.1, 0.2, 0.3))
        b = triangle(weights=(0.1, 0.2, 0.30000000000000004))
        assert not graphs_equal(a, b)

    def test_representation_agnostic(self):
        g = k4()
        assert graphs_equal(g, to_adjlist(g))

    def test_color_change_detected(self):
        a = triangle(colors=(0.5, 0.5, 0.5))
        b = triangle(colors=(0.5, 0.5, 0.5000000001))
        assert not graphs_equal(a, b)


class TestSnapshotRestore:
    def test_empty_graph(self):
        g = build_csr(1, [0.25], [])
        assert graphs_equal(restore(snapshot(g)), g)

    def test_mutation_does_not_leak(self):
        from graphbench.kernels.coalesce import CoalesceParams, run_k3
        g = gen_graph(64, seed=4)
        snap = snapshot(g)
        run_k3(g, CoalesceParams(gamma=0.5, seed=1))
        assert graphs_equal(restore(snap), g)

    def test_generated_10k_round_trip(self):
        g = gen_graph(10_000, seed=42)
        assert graphs_equal(restore(snapshot(g)), g)

    def test_restore_preserves_representation(self):
        g = to_adjlist(k4())
        assert isinstance(restore(snapshot(g)), AdjListGraph)


class TestConversionRoundTrip:
    def test_adjlist_of_csr(self):
        for seed in (1, 9):
            g = gen_graph(128, seed)
            assert graphs_equal(to_adjlist(to_csr(g)), g)

    def test_invariants_on_generated(self):
        g = gen_graph(256, seed=6)
        assert all(g.adjacency[i] <= g.adjacency[i + 1] for i in range(g.n))
        assert len(g.edge_list) % 2 == 0
        assert len(g.edge_list) == 2 * g.undirected_edge_count()
