import random

import pytest
from hypothesis import given, settings

from _gen import hypergraphs, rand_h, triangle
from hgd.hypergraph import build_hypergraph
from hgd.oracle import brute_shattered
from hgd.properties import (
    BUCKETS,
    analyze,
    analyze_corpus,
    bucket,
    c_miwidth,
    degree,
    hn_family,
    iwidth,
    rank,
    vc_dimension,
)
from hgd.hypergraph import submasks


class TestMeasures:
    def test_triangle(self):
        H = triangle()
        assert (degree(H), iwidth(H), c_miwidth(H, 3), rank(H)) == (2, 1, 0, 2)
        assert vc_dimension(H) == 1

    def test_duplicates_ignored_by_default(self):
        H = build_hypergraph([("e1", ["a", "b"]), ("e2", ["a", "b"])])
        assert iwidth(H) == 0
        assert iwidth(H, count_duplicates=True) == 2

    def test_too_few_edges(self):
        assert c_miwidth(triangle(), 4) == 0
        with pytest.raises(ValueError):
            c_miwidth(triangle(), 0)

    def test_vc_cap(self, monkeypatch):
        H = build_hypergraph([("e", [f"v{i}" for i in range(5)])])
        assert vc_dimension(H, cap=4) is None
        monkeypatch.setenv("HGD_VC_CAP", "3")
        assert vc_dimension(H) is None

    @pytest.mark.parametrize("n", range(3, 11))
    def test_hn_family(self, n):
        H = hn_family(n)
        for c in range(1, n):
            assert c_miwidth(H, c) == n - c
        assert vc_dimension(H) <= 2

    def test_buckets(self):
        assert [bucket(v) for v in (0, 5, 6, 40)] == ["0", "5", ">5", ">5"]
        assert BUCKETS[-1] == ">5"


@given(hypergraphs(max_vertices=7, max_edges=7))
@settings(max_examples=80, deadline=None)
def test_vc_matches_brute(H):
    best = max((X.bit_count() for X in submasks(H.all_vertices) if brute_shattered(H, X)), default=0)
    assert vc_dimension(H) == best


class TestCorpus:
    def test_report(self, tmp_path):
        paths = []
        for i, text in enumerate(["e1(a,b).\ne2(b,c).\ne3(c,a).\n", "e(a).\n", "oops("]):
            p = tmp_path / f"h{i}.hg"
            p.write_text(text)
            paths.append(p)
        rep = analyze_corpus(paths, cs=(3,))
        assert len(rep.reports) == 2 and len(rep.errors) == 1
        assert rep.csv().splitlines()[0] == "instance,degree,iwidth,miwidth_c3,vc_dim,rank"
        assert rep.csv().splitlines()[1] == "h0,2,1,0,1,2"
        hist = rep.histogram()
        assert hist["degree"]["2"] == 1 and hist["degree"]["1"] == 1
        assert rep.histogram_csv().splitlines()[0] == "i,degree,iwidth,miwidth_c3,vc_dim"

    def test_parallel_same_as_serial(self, tmp_path):
        rng = random.Random(1)
        paths = []
        for i in range(6):
            H = rand_h(rng)
            p = tmp_path / f"r{i}.hg"
            p.write_text("".join(f"{n}({','.join(vs)}).\n" for n, vs in H.edge_list()))
            paths.append(p)
        assert analyze_corpus(paths, jobs=1).csv() == analyze_corpus(paths, jobs=3).csv()

    def test_single_analyze(self):
        r = analyze(triangle(), "t", cs=(3, 4))
        assert r.row((3, 4)) == ["t", "2", "1", "0", "0", "1", "2"]
