import random
from fractions import Fraction

import pytest

from _gen import clique, rand_h, triangle
from hgd.decomposition import validate, width
from hgd.hypergraph import build_hypergraph
from hgd.oracle import OracleError, brute_exact_width, brute_shattered, brute_width, elimination_width


class TestBrute:
    def test_triangle_widths(self):
        H = triangle()
        assert brute_exact_width(H, "HD") == 2
        assert brute_exact_width(H, "GHD") == 2
        assert brute_exact_width(H, "FHD") == Fraction(3, 2)

    def test_witness_is_valid(self):
        H = clique(4)
        D = brute_width(H, 2, "FHD")
        assert D is not None
        assert validate(H, D, 2) == []
        assert brute_width(H, Fraction(19, 10), "FHD") is None

    def test_vertex_cap(self):
        H = build_hypergraph([("e", [f"v{i}" for i in range(13)])])
        with pytest.raises(OracleError):
            brute_width(H, 1, "GHD")


def test_two_oracles_agree():
    rng = random.Random(8)
    for _ in range(40):
        H = rand_h(rng, 6, 5)
        for kind in ("GHD", "FHD"):
            assert brute_exact_width(H, kind) == elimination_width(H, kind)


def test_shattered():
    H = build_hypergraph([("e1", ["a"]), ("e2", ["b"]), ("e3", ["a", "b"]), ("e4", ["c"])])
    assert brute_shattered(H, H.vset("a", "b"))
    assert not brute_shattered(H, H.vset("a", "b", "c"))
