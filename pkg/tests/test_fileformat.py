from __future__ import annotations

import random

import pytest

from graphbench import (build_adjlist, build_csr, checksum, graphs_equal,
                        parse, serialize)
from graphbench.fileformat import FNV_OFFSET, FNV_PRIME, ParseError, fmt_float
from conftest import gen_graph, random_graph


class TestChecksum:
    def test_empty_input_is_offset_basis(self):
        assert checksum("") == 0xcbf29ce484222325

    def test_single_byte_hand_rolled(self):
        # one FNV-1a step: xor the byte into the basis, multiply by the prime
        expected = ((FNV_OFFSET ^ ord("a")) * FNV_PRIME) & ((1 << 64) - 1)
        assert checksum("a") == expected == 0xaf63dc4c8601ec8c

    def test_bytes_and_str_agree(self):
        assert checksum("graph") == checksum(b"graph")

    def test_equal_graphs_equal_checksums(self):
        edges = [(0, 1, 0.25), (1, 2, 0.75)]
        colors = [0.1, 0.2, 0.3]
        a = build_csr(3, colors, edges)
        b = build_adjlist(3, colors, edges)
        assert checksum(serialize(a)) == checksum(serialize(b))


class TestSerialize:
    def test_single_vertex_no_edges(self):
        text = serialize(build_csr(1, [0.5], []))
        assert text == "GRAPHBENCH v1\n1 0\n0.5\n"

    def test_exactly_one_trailing_newline(self):
        text = serialize(gen_graph(32, seed=1))
        assert text.endswith("\n") and not text.endswith("\n\n")
        assert all(line == line.rstrip() for line in text.split("\n"))

    def test_edges_sorted_with_u_less_than_v(self):
        text = serialize(gen_graph(64, seed=2))
        rows = [tuple(map(int, line.split(" ")[:2]))
                for line in text.split("\n")[2 + 64:-1]]
        assert rows == sorted(rows)
        assert all(u < v for u, v in rows)

    def test_canonical_iff_equal(self):
        g = gen_graph(48, seed=3)
        same = build_adjlist(g.n, list(g.colors), g.undirected_edges())
        other = gen_graph(48, seed=4)
        assert serialize(g) == serialize(same)
        assert serialize(g) != serialize(other)

    def test_17_digit_rendering_round_trips(self):
        for x in (0.1, 1 / 3, 2 ** -53, 0.9999999999999999):
            assert float(fmt_float(x)) == x


class TestParse:
    def test_round_trip_random_256(self):
        g = random_graph(random.Random(11), 256)
        assert graphs_equal(parse(serialize(g)), g)

    def test_round_trip_generated(self):
        g = gen_graph(200, seed=5)
        assert parse(serialize(g)) is not g
        assert graphs_equal(parse(serialize(g)), g)
        assert serialize(parse(serialize(g))) == serialize(g)

    def test_weight_out_of_range(self):
        text = "GRAPHBENCH v1\n2 1\n0.5\n0.5\n0 1 1.5\n"
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.cause == "WeightOutOfRange"
        assert info.value.line == 5

    def test_bad_header(self):
        with pytest.raises(ParseError) as info:
            parse("GRAPHBENCH v2\n1 0\n0.5\n")
        assert info.value.line == 1

    def test_color_out_of_range(self):
        with pytest.raises(ParseError) as info:
            parse("GRAPHBENCH v1\n1 0\n1.0000001\n")
        assert info.value.cause == "ColorOutOfRange"

    def test_self_loop_rejected(self):
        text = "GRAPHBENCH v1\n2 1\n0.5\n0.5\n1 1 0.5\n"
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.cause == "SelfLoop"

    def test_edge_order_enforced(self):
        text = "GRAPHBENCH v1\n3 2\n0.5\n0.5\n0.5\n1 2 0.5\n0 1 0.5\n"
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.cause == "EdgeOrder"

    def test_reversed_endpoints_rejected(self):
        text = "GRAPHBENCH v1\n2 1\n0.5\n0.5\n1 0 0.5\n"
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.cause == "EdgeOrder"

    def test_duplicate_edge_rejected(self):
        text = "GRAPHBENCH v1\n2 2\n0.5\n0.5\n0 1 0.5\n0 1 0.5\n"
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.cause == "DuplicateEdge"

    def test_endpoint_out_of_range(self):
        text = "GRAPHBENCH v1\n2 1\n0.5\n0.5\n0 2 0.5\n"
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.cause == "EndpointOutOfRange"

    def test_missing_trailing_newline(self):
        with pytest.raises(ParseError):
            parse("GRAPHBENCH v1\n1 0\n0.5")

    def test_double_trailing_newline(self):
        with pytest.raises(ParseError):
            parse("GRAPHBENCH v1\n1 0\n0.5\n\n")

    def test_truncated_file(self):
        with pytest.raises(ParseError) as info:
            parse("GRAPHBENCH v1\n3 0\n0.5\n")
        assert info.value.cause == "UnexpectedEnd"

    def test_trailing_data(self):
        with pytest.raises(ParseError) as info:
            parse("GRAPHBENCH v1\n1 0\n0.5\n0.5\n")
        assert info.value.cause == "TrailingData"

    def test_nan_rejected(self):
        with pytest.raises(ParseError):
            parse("GRAPHBENCH v1\n1 0\nnan\n")
