"""Decomposition trees (HD, GHD, FHD) and their validators.

Bags are stored as frozensets of vertex names and covers as
:class:`EdgeWeighting` keyed by edge name, so a tree can be checked
against any hypergraph sharing those names (e.g. an augmented one).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator

from .covers import EdgeWeighting, coverage, weight
from .hypergraph import Hypergraph, HypergraphError, bits, component_masks

KINDS = ("HD", "GHD", "FHD")


class DecompositionError(ValueError):
    """Structural problem: dangling reference, cycle, or several roots."""


@dataclass(frozen=True)
class Violation:
    """One failed condition. ``condition`` is one of
    ``edge``, ``connected``, ``cover``, ``width``, ``integral``, ``special``,
    ``weak-special``, ``fnf-1``, ``fnf-2``, ``fnf-3``."""

    condition: str
    node: str | None
    witness: str


@dataclass(frozen=True)
class Node:
    id: str
    parent: str | None
    bag: frozenset[str]
    cover: EdgeWeighting

    def with_bag(self, bag: Iterable[str]) -> "Node":
        return replace(self, bag=frozenset(bag))

    def with_cover(self, cover: EdgeWeighting) -> "Node":
        return replace(self, cover=cover)


@dataclass
class DecompositionTree:
    kind: str
    nodes: list[Node] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DecompositionError(f"unknown kind {self.kind!r}")
        self._index = {}
        for nd in self.nodes:
            if nd.id in self._index:
                raise DecompositionError(f"duplicate node id {nd.id}")
            self._index[nd.id] = nd
        roots = [nd.id for nd in self.nodes if nd.parent is None]
        if self.nodes and len(roots) != 1:
            raise DecompositionError(f"expected one root, found {len(roots)}")
        self._children: dict[str, list[str]] = {nd.id: [] for nd in self.nodes}
        for nd in self.nodes:
            if nd.parent is not None:
                if nd.parent not in self._index:
                    raise DecompositionError(f"node {nd.id} has unknown parent {nd.parent}")
                self._children[nd.parent].append(nd.id)
        if self.nodes and len(list(self.preorder())) != len(self.nodes):
            raise DecompositionError("parent links contain a cycle")

    # -- navigation ---------------------------------------------------------

    @property
    def root(self) -> Node:
        return next(nd for nd in self.nodes if nd.parent is None)

    def node(self, node_id: str) -> Node:
        return self._index[node_id]

    def children(self, node_id: str) -> list[Node]:
        return [self._index[c] for c in self._children[node_id]]

    def preorder(self) -> Iterator[Node]:
        if not self.nodes:
            return
        stack = [self.root.id]
        seen = set()
        while stack:
            nid = stack.pop()
            if nid in seen:
                return
            seen.add(nid)
            yield self._index[nid]
            stack.extend(reversed(self._children[nid]))

    def bfs(self) -> Iterator[Node]:
        if not self.nodes:
            return
        queue = deque([self.root.id])
        while queue:
            nid = queue.popleft()
            yield self._index[nid]
            queue.extend(self._children[nid])

    def subtree_vertices(self, node_id: str) -> frozenset[str]:
        """V(T_u)."""
        out = set(self._index[node_id].bag)
        for c in self._children[node_id]:
            out |= self.subtree_vertices(c)
        return frozenset(out)

    def neighbours(self, node_id: str) -> list[str]:
        nd = self._index[node_id]
        out = list(self._children[node_id])
        if nd.parent is not None:
            out.append(nd.parent)
        return out

    def __len__(self) -> int:
        return len(self.nodes)

    def retag(self, kind: str) -> "DecompositionTree":
        return DecompositionTree(kind, list(self.nodes))

    def map_nodes(self, fn) -> "DecompositionTree":
        return DecompositionTree(self.kind, [fn(nd) for nd in self.nodes])


def width(D: DecompositionTree) -> Fraction:
    return max((weight(nd.cover) for nd in D.nodes), default=Fraction(0))


# -- validation ------------------------------------------------------------


def _check_refs(H: Hypergraph, D: DecompositionTree) -> None:
    for nd in D.nodes:
        for v in nd.bag:
            if v not in H._vindex:
                raise DecompositionError(f"node {nd.id} mentions unknown vertex {v}")
        for e in nd.cover.weights:
            if not H.has_edge(e):
                raise DecompositionError(f"node {nd.id} mentions unknown edge {e}")


def _occurrence_connected(D: DecompositionTree, v: str) -> bool:
    holders = {nd.id for nd in D.nodes if v in nd.bag}
    if not holders:
        return True
    start = next(iter(holders))
    seen, stack = {start}, [start]
    while stack:
        cur = stack.pop()
        for nb in D.neighbours(cur):
            if nb in holders and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == holders


def _full_union(H: Hypergraph, cover: EdgeWeighting) -> int:
    mask = 0
    for e in cover.full_edges():
        mask |= H.edge(e)
    return mask


def validate(H: Hypergraph, D: DecompositionTree, k=None) -> list[Violation]:
    """All violated conditions; an empty list means D is a valid decomposition."""
    if not D.nodes:
        raise DecompositionError("decomposition has no nodes")
    _check_refs(H, D)
    out: list[Violation] = []
    bags = [(nd, H.vset(nd.bag)) for nd in D.nodes]
    for name, e in zip(H.edge_names, H.edge_masks):
        if not any(e & ~b == 0 for _, b in bags):
            out.append(Violation("edge", None, name))
    for v in H.vertices:
        if not _occurrence_connected(D, v):
            out.append(Violation("connected", None, v))
    for nd, b in bags:
        missing = b & ~coverage(H, nd.cover)
        if missing:
            out.append(Violation("cover", nd.id, H.names(missing)[0]))
        if D.kind != "FHD" and nd.cover.kind != "integral":
            out.append(Violation("integral", nd.id, next(e for e, w in nd.cover.items() if w != 1)))
        if k is not None and weight(nd.cover) > Fraction(k):
            out.append(Violation("width", nd.id, str(weight(nd.cover))))
    if D.kind == "HD":
        for nd, b in bags:
            below = H.vset(D.subtree_vertices(nd.id))
            bad = below & coverage(H, nd.cover) & ~b
            if bad:
                out.append(Violation("special", nd.id, H.names(bad)[0]))
    return out


def check_weak_special(H: Hypergraph, D: DecompositionTree) -> list[Violation]:
    """Special condition restricted to edges of weight exactly 1."""
    _check_refs(H, D)
    out = []
    for nd in D.nodes:
        below = H.vset(D.subtree_vertices(nd.id))
        bag = H.vset(nd.bag)
        for e in sorted(nd.cover.full_edges(), key=H.edge_index):
            bad = H.edge(e) & below & ~bag
            if bad:
                out.append(Violation("weak-special", nd.id, f"{e}:{H.names(bad)[0]}"))
    return out


def fractional_part(H: Hypergraph, nd: Node) -> int:
    """B_2 = B_u minus the vertices covered by the weight-1 edges."""
    return H.vset(nd.bag) & ~_full_union(H, nd.cover)


def check_c_bounded(H: Hypergraph, D: DecompositionTree, c: int) -> bool:
    return all(fractional_part(H, nd).bit_count() <= c for nd in D.nodes)


def bag_maximalize(H: Hypergraph, D: DecompositionTree) -> DecompositionTree:
    """Grow bags with covered vertices while connectedness survives, to a fixpoint."""
    bad = [v for v in validate(H, D) if v.condition != "special"]
    if bad:
        raise DecompositionError(f"input is not a valid decomposition: {bad[0]}")
    bags = {nd.id: set(nd.bag) for nd in D.nodes}
    order = [nd.id for nd in D.bfs()]
    changed = True
    while changed:
        changed = False
        for nid in order:
            nd = D.node(nid)
            for v in H.names(coverage(H, nd.cover)):
                if v in bags[nid]:
                    continue
                if any(v in bags[nb] for nb in D.neighbours(nid)):
                    bags[nid].add(v)
                    changed = True
    return D.map_nodes(lambda nd: nd.with_bag(bags[nd.id]))


def check_fnf(H: Hypergraph, D: DecompositionTree) -> list[Violation]:
    _check_refs(H, D)
    out = []
    for r in D.nodes:
        br = H.vset(r.bag)
        comps = component_masks(H, br)
        for s in D.children(r.id):
            bs = H.vset(s.bag)
            below = H.vset(D.subtree_vertices(s.id))
            matches = [c for c in comps if below == c | (br & bs)]
            if len(matches) != 1:
                out.append(Violation("fnf-1", s.id, r.id))
                continue
            if not bs & matches[0]:
                out.append(Violation("fnf-2", s.id, r.id))
            leak = coverage(H, s.cover) & br & ~bs
            if leak:
                out.append(Violation("fnf-3", s.id, H.names(leak)[0]))
    return out


def lift_to_original(H: Hypergraph, H2: Hypergraph, D2: DecompositionTree) -> DecompositionTree:
    """Replace subedges of ``H2`` in every cover by their parent edges of ``H``."""

    def lift(nd: Node) -> Node:
        acc: dict[str, Fraction] = {}
        for e, w in nd.cover.items():
            if H.has_edge(e):
                orig = e
            else:
                orig = H2.original_edge(e)
                if orig == e or not H.has_edge(orig):
                    raise DecompositionError(f"subedge {e} has no recorded parent in the input")
            acc[orig] = min(Fraction(1), acc.get(orig, Fraction(0)) + w)
        return nd.with_cover(EdgeWeighting(acc))

    return D2.map_nodes(lift)


def make_node(H: Hypergraph, node_id: str, parent: str | None, bag: int, cover: EdgeWeighting) -> Node:
    return Node(node_id, parent, frozenset(H.names(bag)), cover)
