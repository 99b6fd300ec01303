from __future__ import annotations

import pytest

from graphbench import InvalidParamsError, build_csr, to_adjlist
from graphbench.kernels.spectral import (DimensionMismatchError, SpectralParams,
                                         SpectralResult, ZeroVectorError,
                                         matvec, row_sums, run_k2)
from graphbench.oracles import dense_matrix, oracle_power_step
from conftest import gen_graph

INF = float("inf")


def p3():
    return build_csr(3, [0.5] * 3, [(0, 1, 1.0), (1, 2, 1.0)])


class TestRowSums:
    def test_isolated_vertex_zero(self):
        g = build_csr(2, [0.0, 0.0], [])
        assert row_sums(g) == [0.0, 0.0]

    def test_single_edge(self):
        g = build_csr(2, [0.0, 0.0], [(0, 1, 0.5)])
        assert row_sums(g) == [0.5, 0.5]

    def test_matches_dense_matrix(self):
        g = gen_graph(128, seed=50)
        mat = dense_matrix(g)
        dense = [sum(row) for row in mat.weights]
        sparse = row_sums(g)
        assert all(abs(a - b) < 1e-12 for a, b in zip(sparse, dense))


class TestMatvec:
    def test_empty_graph_zero_vector(self):
        g = build_csr(3, [0.0] * 3, [])
        assert matvec(g, [1.0, 2.0, 3.0]) == [0.0, 0.0, 0.0]

    def test_two_vertices(self):
        g = build_csr(2, [0.0, 0.0], [(0, 1, 1.0)])
        assert matvec(g, [0.5, 0.5]) == [0.5, 0.5]

    def test_p3_against_dense_oracle(self):
        g = p3()
        x = [1 / 3] * 3
        assert matvec(g, x) == oracle_power_step(dense_matrix(g), x)
        assert matvec(g, x) == [1 / 3, 2 / 3, 1 / 3]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            matvec(p3(), [1.0, 2.0])


class TestRunK2:
    def test_zero_iterations(self):
        g = p3()
        res = run_k2(g, SpectralParams(1e-9, 0))
        assert res.x == [1 / 3] * 3
        assert res.iterations == 0
        assert res.theta == INF

    def test_fixed_point_stops_after_one_iteration(self):
        g = build_csr(2, [0.0, 0.0], [(0, 1, 1.0)])
        res = run_k2(g, SpectralParams(1e-9, 100))
        assert res.x == [0.5, 0.5]
        assert res.iterations == 1
        assert res.theta == 0.0

    def test_p3_first_iteration_frozen_values(self):
        # by hand: y = (1/3, 2/3, 1/3), L1 norm 4/3, theta = 1/3
        res = run_k2(p3(), SpectralParams(1e-9, 1))
        assert res.x == [0.25, 0.5, 0.25]
        assert abs(res.theta - 1 / 3) < 1e-15

    def test_zero_weights_reported(self):
        g = build_csr(2, [0.0, 0.0], [(0, 1, 0.0)])
        with pytest.raises(ZeroVectorError):
            run_k2(g, SpectralParams(1e-9, 10))

    def test_edgeless_graph_reported(self):
        g = build_csr(3, [0.0] * 3, [])
        with pytest.raises(ZeroVectorError):
            run_k2(g, SpectralParams(1e-9, 10))

    def test_invalid_params(self):
        with pytest.raises(InvalidParamsError):
            run_k2(p3(), SpectralParams(0.0, 10))
        with pytest.raises(InvalidParamsError):
            run_k2(p3(), SpectralParams(1e-9, -1))

    def test_normalized_and_nonnegative(self):
        g = gen_graph(128, seed=51)
        res = run_k2(g, SpectralParams(1e-9, 10_000))
        assert abs(sum(res.x) - 1.0) <= 1e-12
        assert all(v >= 0.0 for v in res.x)
        assert res.row_sums == row_sums(g)

    def test_iterates_match_dense_oracle_trajectory(self):
        g = gen_graph(96, seed=52)
        params = SpectralParams(1e-9, 10_000)
        res = run_k2(g, params)
        mat = dense_matrix(g)
        x = [1.0 / g.n] * g.n
        for step in range(1, res.iterations + 1):
            y = oracle_power_step(mat, x)
            norm = sum(abs(v) for v in y)
            x = [v / norm for v in y]
            partial = run_k2(g, SpectralParams(1e-9, step))
            l1 = sum(abs(a - b) for a, b in zip(partial.x, x))
            assert l1 <= 1e-12

    def test_representations_agree_bitwise(self):
        g = gen_graph(128, seed=53)
        ra = run_k2(g, SpectralParams(1e-9, 500))
        rb = run_k2(to_adjlist(g), SpectralParams(1e-9, 500))
        assert ra.x == rb.x
        assert ra.theta == rb.theta
        assert ra.iterations == rb.iterations

    def test_result_type(self):
        res = run_k2(p3(), SpectralParams(1e-9, 5))
        assert isinstance(res, SpectralResult)
