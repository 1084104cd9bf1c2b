import pytest
from hypothesis import given

from _gen import hypergraphs, triangle
from hgd.hypergraph import (
    HypergraphError,
    boundary,
    build_hypergraph,
    components,
    dual,
    edges_incident,
    induced_sub,
    is_essential,
    reduce_essential,
)


class TestConstruction:
    def test_first_seen_order(self):
        H = build_hypergraph([("e1", ["c", "a"]), ("e2", ["b", "a"])])
        assert H.vertices == ("c", "a", "b")
        assert H.edge_vertices("e2") == ["a", "b"]

    def test_duplicate_id_rejected(self):
        with pytest.raises(HypergraphError):
            build_hypergraph([("e1", ["a"]), ("e1", ["b"])])

    def test_empty_edge_rejected(self):
        with pytest.raises(HypergraphError):
            build_hypergraph([("e1", [])])

    def test_vertex_cap(self):
        with pytest.raises(HypergraphError):
            build_hypergraph([("e", ["a", "b", "c"])], vertex_cap=2)

    def test_unknown_names(self):
        H = triangle()
        with pytest.raises(HypergraphError):
            H.vset("zz")
        with pytest.raises(HypergraphError):
            H.edge("nope")


class TestComponents:
    def test_split_path(self):
        H = build_hypergraph([("e1", ["a", "b"]), ("e2", ["b", "c"]), ("e3", ["c", "d"])])
        comps = components(H, H.vset("b"))
        assert [H.names(c.members) for c in comps] == [["a"], ["c", "d"]]

    def test_empty_separator_is_whole_connected_graph(self):
        H = triangle()
        assert [c.members for c in components(H, 0)] == [H.all_vertices]

    def test_boundary_and_incident(self):
        H = triangle()
        C = H.vset("a")
        assert H.names(boundary(H, C)) == ["b", "c"]
        assert edges_incident(H, C) == ["e1", "e3"]

    def test_unknown_separator(self):
        H = triangle()
        with pytest.raises(HypergraphError):
            components(H, 1 << 10)

    @given(hypergraphs())
    def test_components_partition_complement(self, H):
        for sep in (0, 1, H.all_vertices >> 1):
            comps = components(H, sep)
            union = 0
            for c in comps:
                assert union & c.members == 0
                union |= c.members
            assert union == H.all_vertices & ~sep


class TestDerived:
    def test_induced_sub_dedupes_traces(self):
        H = build_hypergraph([("e1", ["a", "b", "c"]), ("e2", ["a", "b", "d"])])
        S = induced_sub(H, H.vset("a", "b"))
        assert S.edge_names == ("e1",)
        assert S.parents == {"e1": "e1"}

    def test_dual_of_triangle(self):
        res = dual(triangle())
        assert not res.non_essential
        D = res.hypergraph
        assert set(D.edge_names) == {"a", "b", "c"}
        assert D.edge_vertices("a") == ["e1", "e3"]

    def test_reduce_essential(self):
        H = build_hypergraph([("e1", ["a", "b", "c"]), ("e2", ["c", "d"])])
        assert not is_essential(H)
        R, merged = reduce_essential(H)
        assert merged == {"b": "a"}
        assert is_essential(R)
