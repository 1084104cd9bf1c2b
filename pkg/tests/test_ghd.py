import random

import pytest

from _gen import clique, rand_h, triangle
from hgd.decomposition import validate, width
from hgd.ghd import BudgetExceeded, augment, f_bip, g_bmip, solve_ghd
from hgd.hd import SolverError, hw, solve_hd
from hgd.hypergraph import build_hypergraph
from hgd.oracle import brute_width
from hgd.properties import iwidth


def gap_instance():
    # four triples around a cycle, opposite edges sharing a vertex
    return build_hypergraph(
        [
            ("e1", ["a", "b", "x"]),
            ("e2", ["b", "c", "y"]),
            ("e3", ["c", "d", "x"]),
            ("e4", ["d", "a", "y"]),
        ]
    )


class TestSubedges:
    def test_f_bip_traces(self):
        H = triangle()
        extra = f_bip(H, 1)
        names = {H.names(m)[0] for m in extra.masks() if m.bit_count() == 1}
        assert names == {"a", "b", "c"}
        assert all(m not in H.edge_masks for m in extra.masks())

    def test_augment_names_and_parents(self):
        H = triangle()
        H2 = augment(H, f_bip(H, 1))
        sub = [e for e in H2.edge_names if "~" in e]
        assert sub and all(H2.original_edge(e) in H.edge_names for e in sub)

    def test_bmip_contains_bip_traces_at_c2(self):
        H = gap_instance()
        a = {m for m in f_bip(H, 1).masks()}
        b = {m for m in g_bmip(H, 1, 2).masks()}
        assert a <= b

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as exc:
            f_bip(clique(6), 3, budget=5)
        assert exc.value.required > 5

    def test_bad_args(self):
        with pytest.raises(SolverError):
            g_bmip(triangle(), 1, 1)
        with pytest.raises(SolverError):
            solve_ghd(triangle(), 2, mode="xyz")


class TestSolveGHD:
    def test_triangle(self):
        res = solve_ghd(triangle(), 2)
        assert res.accepted and res.decomposition.kind == "GHD"
        assert validate(triangle(), res.decomposition, 2) == []
        assert not solve_ghd(triangle(), 1).accepted

    def test_unsound_if_annotation(self):
        H = build_hypergraph([("e1", ["a", "b", "c"]), ("e2", ["a", "b", "d"]), ("e3", ["c", "d"])])
        res = solve_ghd(H, 1, assume_i=1)
        assert not res.accepted
        assert res.note.startswith("UNSOUND-IF")
        assert solve_ghd(H, 1).note == ""

    def test_bmip_mode(self):
        H = clique(4)
        res = solve_ghd(H, 2, mode="bmip", c=2)
        assert res.accepted and res.mode == "bmip:2"


def test_matches_oracle_and_sandwich():
    rng = random.Random(4)
    seen = 0
    while seen < 50:
        H = rand_h(rng)
        if iwidth(H) > 2:
            continue
        seen += 1
        h = hw(H)
        for k in (1, 2, 3):
            res = solve_ghd(H, k)
            assert res.accepted == (brute_width(H, k, "GHD") is not None)
            if res.accepted:
                assert validate(H, res.decomposition, k) == []
        H2 = augment(H, f_bip(H, h))
        assert hw(H2) <= h
