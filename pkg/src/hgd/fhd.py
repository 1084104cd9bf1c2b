"""Fractional hypertree decompositions with c-bounded fractional part."""

from __future__ import annotations

import itertools
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .covers import EdgeWeighting, coverage, fractional_cover_avoiding
from .decomposition import DecompositionTree, Node, lift_to_original
from .ghd import BudgetExceeded, SubedgeSet, augment, subedge_budget
from .hd import SolverError, edge_sets_by_projection
from .hypergraph import Hypergraph, bits, boundary, component_masks
from .properties import degree, iwidth, rank

ONE = Fraction(1)


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if "/" in text:
        p, q = text.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def augment_fractional(H: Hypergraph, k, c: int, budget: int | None = None) -> Hypergraph:
    """H plus every non-empty subedge of size <= floor(k)*iwidth(H) + c."""
    k = parse_rational(k)
    if k < 1:
        raise SolverError("k must be at least 1")
    cap = math.floor(k) * iwidth(H) + c
    budget = subedge_budget(budget)
    need = 0
    for i in H.distinct_edges():
        size = H.edge_masks[i].bit_count()
        need += sum(math.comb(size, j) for j in range(1, min(cap, size) + 1))
    if need > budget:
        raise BudgetExceeded(f"augmentation needs up to {need} subedges, budget is {budget}", need)
    existing = set(H.edge_masks)
    extra = SubedgeSet("fractional")
    for i in H.distinct_edges():
        members = list(bits(H.edge_masks[i]))
        for j in range(1, min(cap, len(members)) + 1):
            for combo in itertools.combinations(members, j):
                mask = sum(1 << v for v in combo)
                if mask not in existing:
                    extra.add(mask, H.edge_names[i])
    return augment(H, extra)


def _subsets_upto(free: int, limit: int):
    """Submasks of ``free`` with at most ``limit`` bits: by size, then lexicographic."""
    members = list(bits(free))
    for size in range(0, min(limit, len(members)) + 1):
        for combo in itertools.combinations(members, size):
            yield sum(1 << v for v in combo)


class _FracSearch:
    def __init__(self, H: Hypergraph, k: Fraction, c: int, check_2a: bool, rank_mode: bool):
        self.H = H
        self.k = k
        self.c = c
        self.check_2a = check_2a
        self.rank_mode = rank_mode
        self.memo: dict[int, tuple | None] = {}

    def configurations(self, C: int):
        H, k, c = self.H, self.k, self.c
        dC = boundary(H, C)
        region = C | dC
        choices = [((), 0)]
        if not self.rank_mode:
            choices += list(edge_sets_by_projection(H, region, math.floor(k)))
        for combo, _ in choices:
            VS = H.union(combo)
            need = dC & ~VS
            if need.bit_count() > c:
                continue
            free = region & ~need
            if self.check_2a:
                free &= ~VS
            left = k - len(combo)
            avoid = [i for i in H.incident(C) if i not in combo]
            for X in _subsets_upto(free, c - need.bit_count()):
                W = need | X
                sep = VS | W
                if not sep & C:
                    continue
                bad = [i for i in avoid if H.edge_masks[i] & C & ~sep]
                gamma = fractional_cover_avoiding(H, W & ~VS, left, bad)
                if gamma is None:
                    continue
                yield combo, W, gamma, sep

    def solve(self, C: int) -> bool:
        if C in self.memo:
            return self.memo[C] is not None
        self.memo[C] = None
        for combo, W, gamma, sep in self.configurations(C):
            if all(self.solve(sub) for sub in component_masks(self.H, sep, within=C)):
                self.memo[C] = (combo, W, gamma)
                return True
        return False

    def build(self) -> DecompositionTree:
        H = self.H
        nodes: list[Node] = []
        stack = [(H.all_vertices, None, 0)]
        while stack:
            C, parent, parent_bag = stack.pop()
            combo, W, gamma = self.memo[C]
            VS = H.union(combo)
            weights = dict(gamma.weights)
            for i in combo:
                weights[H.edge_names[i]] = ONE
            cover = EdgeWeighting(weights)
            bag = (VS | W) & (parent_bag | C)
            # vertices of the parent bag that the cover reaches join the bag
            bag |= coverage(H, cover) & parent_bag
            nid = f"n{len(nodes)}"
            nodes.append(Node(nid, parent, frozenset(H.names(bag)), cover))
            for sub in reversed(component_masks(H, VS | W, within=C)):
                stack.append((sub, nid, bag))
        return DecompositionTree("FHD", nodes)


def fracdecomp(
    H: Hypergraph, k, c: int, check_2a: bool = True, rank_mode: bool = False
) -> DecompositionTree | None:
    """FHD of width <= k with c-bounded fractional part and the weak special condition."""
    k = parse_rational(k)
    if k < 1 or c < 0:
        raise SolverError("need k >= 1 and c >= 0")
    if H.n == 0:
        return DecompositionTree("FHD", [Node("n0", None, frozenset(), EdgeWeighting())])
    search = _FracSearch(H, k, c, check_2a, rank_mode)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * H.n + 1000))
    try:
        ok = search.solve(H.all_vertices)
    finally:
        sys.setrecursionlimit(limit)
    return search.build() if ok else None


def c_bound(k, d: int, i: int) -> int:
    """Constant from the recurrence r_{l+1} = r_l + d*i*(r_l + (d-1)*n), n = k*d."""
    k = math.ceil(parse_rational(k))
    if k < 1 or d < 1 or i < 0:
        raise ValueError("need k >= 1, d >= 1, i >= 0")
    n = k * d
    r = n
    for _ in range(n):
        r = r + d * i * (r + (d - 1) * n)
    return k * d * r * i


@dataclass
class FhdResult:
    decomposition: DecompositionTree | None
    c_used: int | None
    iwidth: int
    degree: int
    rank: int
    c_theory: int
    note: str = ""

    @property
    def accepted(self) -> bool:
        return self.decomposition is not None


def solve_fhd(
    H: Hypergraph,
    k,
    c: int | str = "auto",
    rank_mode: bool = False,
    budget: int | None = None,
    check_2a: bool = True,
) -> FhdResult:
    k = parse_rational(k)
    if k < 1:
        raise SolverError("k must be at least 1")
    i, d, r = iwidth(H), degree(H), rank(H)
    c_theory = c_bound(k, max(d, 1), i)
    if rank_mode:
        c_used = math.floor(k * r)
        D = fracdecomp(H, k, c_used, check_2a, rank_mode=True)
        return FhdResult(D, c_used, i, d, r, c_theory, "rank mode")
    if c == "auto":
        cap = min(max(8, math.ceil(k * r)), H.n)
        candidates = range(0, cap + 1)
        note = f"c searched up to {cap}; a reject is complete only up to that bound"
    else:
        candidates = [int(c)]
        note = ""
    for cc in candidates:
        H2 = augment_fractional(H, k, cc, budget)
        D2 = fracdecomp(H2, k, cc, check_2a)
        if D2 is not None:
            D = lift_to_original(H, H2, D2)
            return FhdResult(D, cc, i, d, r, c_theory, note)
    return FhdResult(None, None, i, d, r, c_theory, note)
