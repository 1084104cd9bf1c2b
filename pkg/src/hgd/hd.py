"""Hypertree decompositions by memoised component recursion."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator

from .covers import EdgeWeighting
from .decomposition import DecompositionTree, Node
from .hypergraph import Hypergraph, bits, boundary, component_masks


class SolverError(ValueError):
    pass


@dataclass(frozen=True)
class SearchKey:
    """A subproblem: component plus the vertices it shares with the rest.

    The boundary is a function of the component, so equal components give
    equal keys.
    """

    component: int
    boundary: int

    @classmethod
    def of(cls, H: Hypergraph, C: int) -> "SearchKey":
        return cls(C, boundary(H, C))


def edge_sets_by_projection(H: Hypergraph, region: int, max_size: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Edge sets of size <= ``max_size``, one per distinct trace V(S) & region.

    Yields ``(edge indices, trace)`` by ascending size, then by the sorted
    index tuple. Edges missing ``region`` are skipped since they add nothing.
    """
    singles = []
    seen: set[int] = set()
    for i in H.distinct_edges():
        t = H.edge_masks[i] & region
        if t and t not in seen:
            seen.add(t)
            singles.append(((i,), t))
    level = singles
    size = 1
    while level and size <= max_size:
        level.sort()
        yield from level
        if size == max_size:
            return
        nxt = {}
        for combo, t in level:
            for (j,), s in singles:
                if j in combo:
                    continue
                u = t | s
                if u in seen:
                    continue
                cand = tuple(sorted(combo + (j,)))
                if u not in nxt or cand < nxt[u]:
                    nxt[u] = cand
        seen.update(nxt)
        level = [(c, u) for u, c in nxt.items()]
        size += 1


class _HDSearch:
    def __init__(self, H: Hypergraph, k: int):
        self.H = H
        self.k = k
        self.memo: dict[SearchKey, tuple[int, ...] | None] = {}

    def solve(self, C: int) -> bool:
        key = SearchKey.of(self.H, C)
        if key in self.memo:
            return self.memo[key] is not None
        self.memo[key] = None
        dC = key.boundary
        for combo, trace in edge_sets_by_projection(self.H, C | dC, self.k):
            if dC & ~trace or not trace & C:
                continue
            sep = self.H.union(combo)
            if all(self.solve(sub) for sub in component_masks(self.H, sep, within=C)):
                self.memo[key] = combo
                return True
        return False

    def build(self) -> DecompositionTree:
        H = self.H
        nodes: list[Node] = []
        stack = [(H.all_vertices, None, 0)]
        while stack:
            C, parent, parent_bag = stack.pop()
            combo = self.memo[SearchKey.of(H, C)]
            sep = H.union(combo)
            bag = sep & (parent_bag | C)
            nid = f"n{len(nodes)}"
            cover = EdgeWeighting.integral(H.edge_names[i] for i in combo)
            nodes.append(Node(nid, parent, frozenset(H.names(bag)), cover))
            for sub in reversed(component_masks(H, sep, within=C)):
                stack.append((sub, nid, bag))
        return DecompositionTree("HD", nodes)


def solve_hd(H: Hypergraph, k: int) -> DecompositionTree | None:
    """An HD of width <= k, or None when none exists."""
    if int(k) != k or k < 1:
        raise SolverError("k must be a positive integer")
    if H.n == 0:
        return DecompositionTree("HD", [Node("n0", None, frozenset(), EdgeWeighting())])
    search = _HDSearch(H, int(k))
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * H.n + 1000))
    try:
        ok = search.solve(H.all_vertices)
    finally:
        sys.setrecursionlimit(limit)
    return search.build() if ok else None


def hw(H: Hypergraph) -> int:
    for k in range(1, max(H.m, 1) + 1):
        if solve_hd(H, k) is not None:
            return k
    raise SolverError("no hypertree decomposition found")  # unreachable for valid H
