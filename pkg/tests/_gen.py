"""Shared generators for the test suite."""

import random

from hypothesis import strategies as st

from hgd.hypergraph import build_hypergraph


def rand_h(rng: random.Random, max_vertices=7, max_edges=6, max_size=4):
    n = rng.randint(2, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    m = rng.randint(1, max_edges)
    return build_hypergraph([(f"e{j}", rng.sample(vs, rng.randint(1, min(max_size, n)))) for j in range(m)])


def triangle():
    return build_hypergraph([("e1", ["a", "b"]), ("e2", ["b", "c"]), ("e3", ["c", "a"])])


def clique(n: int):
    vs = [f"k{i}" for i in range(n)]
    return build_hypergraph([(f"e{i}_{j}", [vs[i], vs[j]]) for i in range(n) for j in range(i + 1, n)])


@st.composite
def hypergraphs(draw, max_vertices=6, max_edges=5):
    n = draw(st.integers(1, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    m = draw(st.integers(1, max_edges))
    edges = []
    for j in range(m):
        members = draw(st.lists(st.sampled_from(vs), min_size=1, max_size=n, unique=True))
        edges.append((f"e{j}", members))
    return build_hypergraph(edges)


# -- decomposition mutations --------------------------------------------------

from fractions import Fraction  # noqa: E402

from hgd.covers import EdgeWeighting  # noqa: E402
from hgd.decomposition import DecompositionTree, width  # noqa: E402

MUTATIONS = ("width", "cover", "edge", "connected", "integral")


def _replace(D, nid, node):
    return DecompositionTree(D.kind, [node if nd.id == nid else nd for nd in D.nodes])


def mutate(H, D, rng, kind=None):
    """Break ``D`` in one way; returns (mutant, k to validate against, expected condition).

    Returns None when the requested mutation does not apply to ``D``.
    """
    kind = kind or rng.choice(MUTATIONS)
    k = width(D)
    nodes = list(D.nodes)
    if kind == "width":
        nd = max(nodes, key=lambda x: sum(x.cover.weights.values()))
        spare = [e for e in H.edge_names if nd.cover[e] == 0]
        if not spare:
            return None
        w = dict(nd.cover.weights)
        w[rng.choice(spare)] = Fraction(1)
        return _replace(D, nd.id, nd.with_cover(EdgeWeighting(w))), k, "width"
    if kind == "cover":
        cands = [nd for nd in nodes if nd.bag]
        if not cands:
            return None
        nd = rng.choice(cands)
        return _replace(D, nd.id, nd.with_cover(EdgeWeighting())), k, "cover"
    if kind == "edge":
        v = rng.choice(H.vertices)
        return D.map_nodes(lambda nd: nd.with_bag(nd.bag - {v})), k, "edge"
    if kind == "connected":
        for nd in rng.sample(nodes, len(nodes)):
            near = set(nd.bag)
            if nd.parent is not None:
                near |= D.node(nd.parent).bag
            for c in D.children(nd.id):
                near |= c.bag
            far = sorted({v for x in nodes for v in x.bag} - near)
            if far:
                v = rng.choice(far)
                e = next(e for e in H.edge_names if v in H.edge_vertices(e))
                w = dict(nd.cover.weights)
                w[e] = Fraction(1)
                return _replace(D, nd.id, nd.with_bag(nd.bag | {v}).with_cover(EdgeWeighting(w))), None, "connected"
        return None
    if kind == "integral":
        if D.kind == "FHD":
            return None
        cands = [nd for nd in nodes if nd.cover.weights]
        if not cands:
            return None
        nd = rng.choice(cands)
        w = dict(nd.cover.weights)
        e = rng.choice(sorted(w))
        w[e] = Fraction(1, 2)
        return _replace(D, nd.id, nd.with_cover(EdgeWeighting(w))), k, "integral"
    raise ValueError(kind)
