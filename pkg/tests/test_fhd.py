import random
from fractions import Fraction

import pytest

from _gen import clique, rand_h, triangle
from hgd.decomposition import check_c_bounded, check_fnf, check_weak_special, validate, width
from hgd.fhd import augment_fractional, c_bound, fracdecomp, parse_rational, solve_fhd
from hgd.hd import SolverError
from hgd.oracle import brute_width

HALF3 = Fraction(3, 2)


class TestFracdecomp:
    def test_triangle_accepts_three_halves(self):
        H = triangle()
        D = fracdecomp(H, HALF3, 3)
        assert D is not None
        assert validate(H, D, HALF3) == []
        assert width(D) == HALF3

    def test_triangle_small_c_rejects(self):
        assert fracdecomp(triangle(), HALF3, 2) is None

    def test_rank_mode(self):
        H = triangle()
        res = solve_fhd(H, HALF3, rank_mode=True)
        assert res.accepted and res.c_used == 3
        assert not solve_fhd(H, Fraction(1499, 1000), rank_mode=True).accepted

    def test_bad_args(self):
        with pytest.raises(SolverError):
            fracdecomp(triangle(), Fraction(1, 2), 1)
        with pytest.raises(SolverError):
            solve_fhd(triangle(), 0)


class TestHelpers:
    def test_parse_rational(self):
        assert parse_rational("3/2") == HALF3
        assert parse_rational("2") == 2

    def test_c_bound(self):
        assert c_bound(1, 2, 1) == 68
        assert c_bound(3, 1, 0) == 0
        with pytest.raises(ValueError):
            c_bound(1, 0, 1)

    def test_augment_fractional_sizes(self):
        H = clique(4)
        H2 = augment_fractional(H, 1, 0)
        # iwidth 1, floor(k)*i + c = 1: singletons only
        assert all(m.bit_count() == 1 for m in H2.edge_masks[H.m:])
        assert len(H2.edge_masks) == H.m + 4


def test_matches_oracle_with_properties():
    rng = random.Random(13)
    for _ in range(40):
        H = rand_h(rng, 6, 5)
        for k in (1, HALF3, 2):
            D = fracdecomp(H, k, H.n)
            assert (D is None) == (brute_width(H, k, "FHD") is None)
            if D is not None:
                assert validate(H, D, k) == []
                assert check_weak_special(H, D) == []
                assert check_fnf(H, D) == []
                assert check_c_bounded(H, D, H.n)


def test_solve_fhd_lifts_to_input_edges():
    H = clique(5)
    res = solve_fhd(H, Fraction(5, 2))
    assert res.accepted
    assert all(H.has_edge(e) for nd in res.decomposition.nodes for e in nd.cover.support)
    assert validate(H, res.decomposition, Fraction(5, 2)) == []
