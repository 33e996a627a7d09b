from fractions import Fraction

import networkx as nx
import pytest

from totirr import (
    EdgeListParseError,
    Graph6ParseError,
    InputError,
    emit_graph6,
    format_record,
    gen_complete,
    gen_path,
    parse_edge_list,
    parse_graph6,
    parse_record,
)
from totirr.search import enumerate_labeled_graphs

from conftest import random_graph


class TestGraph6Parse:
    def test_k3(self):
        assert parse_graph6("Bw") == gen_complete(3)

    def test_p3(self):
        g = parse_graph6("Bg")
        assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)

    def test_k1(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.m == 0

    def test_optional_header_stripped(self):
        assert parse_graph6(">>graph6<<Bw") == gen_complete(3)

    def test_bad_byte(self):
        with pytest.raises(Graph6ParseError) as exc:
            parse_graph6("B\x1f")
        assert exc.value.offset == 1

    def test_nonzero_padding(self):
        # P_3 payload is 101000; flip a padding bit: 101001 -> 41 + 63 = 'h'
        with pytest.raises(Graph6ParseError, match="padding"):
            parse_graph6("Bh")

    def test_truncated_payload(self):
        with pytest.raises(Graph6ParseError, match="truncated"):
            parse_graph6("D")

    def test_trailing_bytes(self):
        with pytest.raises(Graph6ParseError, match="trailing"):
            parse_graph6("Bww")

    def test_huge_header_rejected(self):
        with pytest.raises(Graph6ParseError, match="huge"):
            parse_graph6("~~?????")

    def test_empty_string(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("")


class TestGraph6RoundTrip:
    def test_exhaustive_small(self):
        for n in range(1, 5):
            for g in enumerate_labeled_graphs(n):
                s = emit_graph6(g)
                assert parse_graph6(s) == g
                assert emit_graph6(parse_graph6(s)) == s

    def test_random_large(self, rng):
        for _ in range(50):
            g = random_graph(rng.randint(1, 90), rng)
            assert parse_graph6(emit_graph6(g)) == g

    def test_extended_header_range(self, rng):
        g = random_graph(70, rng)
        s = emit_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g

    def test_agrees_with_networkx(self, rng):
        for _ in range(40):
            g = random_graph(rng.randint(1, 40), rng)
            ours = emit_graph6(g)
            ref = nx.to_graph6_bytes(
                nx.from_numpy_array(g.adjacency), header=False
            ).decode().strip()
            assert ours == ref

    def test_parse_agrees_with_networkx(self, rng):
        for _ in range(40):
            ref_graph = nx.gnp_random_graph(rng.randint(1, 30), 0.4, seed=rng.randint(0, 10**9))
            s = nx.to_graph6_bytes(ref_graph, header=False).decode().strip()
            g = parse_graph6(s)
            assert g.n == ref_graph.number_of_nodes()
            assert set(g.edges()) == {tuple(sorted(e)) for e in ref_graph.edges()}


class TestEdgeList:
    def test_p3(self):
        assert parse_edge_list("n 3\n0 1\n1 2") == gen_path(3)

    def test_comments_and_blanks(self):
        g = parse_edge_list("n 2\n\n# no edges\n")
        assert g.n == 2 and g.m == 0

    def test_self_loop_line_number(self):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list("n 3\n0 0")
        assert exc.value.line == 2

    def test_missing_header(self):
        with pytest.raises(EdgeListParseError, match="header"):
            parse_edge_list("0 1\n")

    def test_malformed_line(self):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list("n 3\n0 1 2")
        assert exc.value.line == 2

    def test_out_of_range(self):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list("n 2\n0 5")
        assert exc.value.line == 2


class TestRecords:
    def test_round_trip(self):
        line = format_record(
            [
                ("task", "bound"),
                ("kind", "join"),
                ("actual", 6),
                ("tight", True),
                ("ratio", Fraction(3, 4)),
                ("cs", 0.232050807569),
                ("missing", None),
            ]
        )
        parsed = parse_record(line)
        assert list(parsed) == ["task", "kind", "actual", "tight", "ratio", "cs", "missing"]
        assert parsed["actual"] == "6"
        assert parsed["tight"] == "true"
        assert parsed["ratio"] == "3/4"
        assert parsed["missing"] == "na"

    def test_float_12_significant_digits(self):
        line = format_record([("value", 0.23205080756887720)])
        assert line == "value=0.232050807569"

    def test_malformed_token(self):
        with pytest.raises(InputError):
            parse_record("keyvalue")
