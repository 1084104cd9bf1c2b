import random
from fractions import Fraction

import pytest

from _gen import clique, rand_h, triangle
from hgd.approx import bound_report, fhd_to_ghd_bagwise, fhd_to_ghd_degree
from hgd.covers import EdgeWeighting
from hgd.decomposition import DecompositionError, DecompositionTree, Node, validate, width
from hgd.fhd import fracdecomp
from hgd.properties import degree


def test_triangle_both_methods():
    H = triangle()
    F = fracdecomp(H, Fraction(3, 2), 3)
    for conv in (fhd_to_ghd_bagwise, fhd_to_ghd_degree):
        G = conv(H, F)
        assert G.kind == "GHD"
        assert validate(H, G) == []
        assert width(G) == 2


def test_invalid_input_rejected():
    H = triangle()
    F = DecompositionTree("FHD", [Node("r", None, frozenset("abc"), EdgeWeighting.integral(["e1"]))])
    with pytest.raises(DecompositionError):
        fhd_to_ghd_degree(H, F)


def test_degree_bound_random():
    rng = random.Random(2)
    for _ in range(40):
        H = rand_h(rng, 6, 5)
        F = fracdecomp(H, 2, H.n)
        if F is None:
            continue
        G = fhd_to_ghd_degree(H, F)
        assert validate(H, G) == []
        assert width(G) <= degree(H) * width(F)
        assert width(fhd_to_ghd_bagwise(H, F)) <= width(G)


class TestBounds:
    def test_triangle_report(self):
        rep = bound_report(triangle(), Fraction(3, 2))
        assert rep.vc == 1 and rep.rho_star == Fraction(3, 2)
        assert rep.degree == 2 and rep.degree_bound == 3
        assert "rho_star: 3/2" in rep.as_text()
        assert rep.csv_row()[0] == "1"

    def test_cap_makes_vc_unavailable(self):
        rep = bound_report(clique(5), 2, vc_cap=3)
        assert rep.vc is None and rep.cigap_bound is None
        assert "vc: unavailable" in rep.as_text()
