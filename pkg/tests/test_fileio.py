from fractions import Fraction

import pytest
from hypothesis import given, settings

from _gen import hypergraphs, triangle
from hgd.decomposition import validate, width
from hgd.fileio import (
    ParseError,
    format_fraction,
    parse_decomposition,
    parse_fraction,
    parse_hypergraph,
    write_decomposition,
    write_hypergraph,
)
from hgd.hardness import parse_formula, reduce_3sat, witness_ghd
from hgd.hd import hw, solve_hd


class TestHypergraphFormat:
    def test_single_edge(self):
        H = parse_hypergraph("e1(a,b).")
        assert H.m == 1 and H.vertices == ("a", "b")

    def test_duplicate_id_position(self):
        with pytest.raises(ParseError) as exc:
            parse_hypergraph("e1(a,b).\ne1(c).")
        assert (exc.value.line, exc.value.col) == (2, 1)

    def test_crlf_and_comments(self):
        lf = "% header\ne1(a,b),\n\ne2(b,c).\n"
        a = parse_hypergraph(lf)
        b = parse_hypergraph(lf.replace("\n", "\r\n"))
        assert a.edge_list() == b.edge_list()

    @pytest.mark.parametrize("text", ["e1(a,b)", "e1()", "e1(a b).", "(a)."])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_hypergraph(text)

    @given(hypergraphs())
    @settings(max_examples=50)
    def test_round_trip(self, H):
        text = write_hypergraph(H)
        assert write_hypergraph(parse_hypergraph(text)) == text


class TestFractions:
    def test_format(self):
        assert format_fraction(2) == "2/1"
        assert format_fraction(Fraction(6, 4)) == "3/2"
        assert parse_fraction("4") == 4
        with pytest.raises(ValueError):
            parse_fraction("1/0")


class TestDecompositionFormat:
    def test_witness_round_trip(self):
        phi = parse_formula("(x1 | ~x2 | x3) & (~x1 | x2 | ~x3)")
        D = witness_ghd(phi, {1: True, 2: False, 3: False})
        text = write_decomposition(D)
        back = parse_decomposition(text)
        assert back.warnings == []
        assert write_decomposition(back.tree) == text
        H, _ = reduce_3sat(phi)
        assert validate(H, back.tree, 2) == []

    def test_width_mismatch_warns(self):
        text = write_decomposition(solve_hd(triangle(), 2)).replace("width 2/1", "width 1/1")
        assert parse_decomposition(text).warnings

    def test_version_and_empty(self):
        text = write_decomposition(solve_hd(triangle(), 2))
        with pytest.raises(ParseError):
            parse_decomposition(text.replace("hgd-decomp 1", "hgd-decomp 9"))
        with pytest.raises(ParseError):
            parse_decomposition("hgd-decomp 1\nkind HD width 1/1\n")
        with pytest.raises(ParseError):
            parse_decomposition("")

    def test_bad_records(self):
        with pytest.raises(ParseError):
            parse_decomposition("kind HD width 1/1\nnode n0 parent - bag {a} cover {e1}\n")
        with pytest.raises(ParseError):
            parse_decomposition("node n0 parent - bag {a} cover {e1=1/1}\n")
        with pytest.raises(ParseError):
            parse_decomposition("kind XD width 1/1\n")

    @given(hypergraphs())
    @settings(max_examples=40, deadline=None)
    def test_solver_output_round_trips(self, H):
        D = solve_hd(H, hw(H))
        text = write_decomposition(D)
        back = parse_decomposition(text).tree
        assert write_decomposition(back) == text
        assert width(back) == width(D)
