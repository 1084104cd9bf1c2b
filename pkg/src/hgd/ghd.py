"""Generalized hypertree decompositions via subedge augmentation."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .decomposition import DecompositionTree, lift_to_original
from .hd import SolverError, solve_hd
from .hypergraph import Hypergraph, submasks

DEFAULT_SUBEDGE_BUDGET = 10**7


class BudgetExceeded(SolverError):
    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


def subedge_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("HGD_BUDGET_SUBEDGES", DEFAULT_SUBEDGE_BUDGET))


@dataclass
class SubedgeSet:
    """Generated subedges: vertex mask -> parent edge names (first parent wins)."""

    provenance: str
    subedges: dict[int, list[str]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.subedges)

    def add(self, mask: int, parent: str) -> None:
        self.subedges.setdefault(mask, [])
        if parent not in self.subedges[mask]:
            self.subedges[mask].append(parent)

    def masks(self) -> list[int]:
        return list(self.subedges)


def _union_closure(parts: set[int], arity: int) -> set[int]:
    """All unions of at most ``arity`` members of ``parts``."""
    out = set(parts)
    frontier = set(parts)
    for _ in range(arity - 1):
        nxt = {a | b for a in frontier for b in parts} - out
        if not nxt:
            break
        out |= nxt
        frontier = nxt
    return out


def _maximal(masks: set[int]) -> list[int]:
    ordered = sorted(masks, key=lambda m: -m.bit_count())
    keep: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


def _emit(H: Hypergraph, pieces: dict[int, set[int]], provenance: str, budget: int) -> SubedgeSet:
    """All non-empty subsets of the pieces of each edge, minus existing edges."""
    need = sum((1 << m.bit_count()) - 1 for ps in pieces.values() for m in _maximal(ps))
    if need > budget:
        raise BudgetExceeded(
            f"subedge generation needs up to {need} subedges, budget is {budget}; "
            "lower k or raise HGD_BUDGET_SUBEDGES",
            need,
        )
    existing = set(H.edge_masks)
    out = SubedgeSet(provenance)
    for i in H.distinct_edges():
        for top in _maximal(pieces.get(i, set())):
            for sub in submasks(top):
                if sub not in existing:
                    out.add(sub, H.edge_names[i])
    return out


def f_bip(H: Hypergraph, k: int, budget: int | None = None) -> SubedgeSet:
    """Subsets of e & (e1 | ... | ej) for j <= k edges other than e."""
    if k < 1:
        raise SolverError("k must be at least 1")
    budget = subedge_budget(budget)
    pieces: dict[int, set[int]] = {}
    distinct = H.distinct_edges()
    for i in distinct:
        e = H.edge_masks[i]
        meets = {e & H.edge_masks[j] for j in distinct if j != i} - {0}
        pieces[i] = _union_closure(meets, k) if meets else set()
    return _emit(H, pieces, "bip", budget)


def g_bmip(H: Hypergraph, k: int, c: int, budget: int | None = None, arity: int | None = None) -> SubedgeSet:
    """Subsets of unions of at most k^(c-1) sets e & f1 & ... & ft with t <= c-1."""
    if k < 1 or c < 2:
        raise SolverError("need k >= 1 and c >= 2")
    budget = subedge_budget(budget)
    arity = k ** (c - 1) if arity is None else arity
    distinct = H.distinct_edges()
    pieces: dict[int, set[int]] = {}
    for i in distinct:
        family: set[int] = set()
        # depth-first over branches rooted at e; empty intersections stop a branch
        stack = [(H.edge_masks[i], -1, 0)]
        while stack:
            cur, last, depth = stack.pop()
            if depth == c - 1:
                continue
            for j in distinct:
                if j == i or j <= last:
                    continue
                meet = cur & H.edge_masks[j]
                if meet:
                    family.add(meet)
                    stack.append((meet, j, depth + 1))
        pieces[i] = _union_closure(family, arity) if family else set()
    return _emit(H, pieces, f"bmip:{c}", budget)


def augment(H: Hypergraph, extra: SubedgeSet) -> Hypergraph:
    """H plus the subedges, each named ``parent~n`` and linked to its parent."""
    names = list(H.edge_names)
    masks = list(H.edge_masks)
    parents = dict(H.parents)
    taken = set(names)
    for n, (mask, owners) in enumerate(extra.subedges.items()):
        name = f"{owners[0]}~{n}"
        while name in taken:
            name += "'"
        taken.add(name)
        names.append(name)
        masks.append(mask)
        parents[name] = owners[0]
    return Hypergraph.from_masks(H.vertices, names, masks, parents)


@dataclass
class GhdResult:
    decomposition: DecompositionTree | None
    mode: str
    iwidth: int
    miwidth: int | None
    subedges: int
    note: str = ""

    @property
    def accepted(self) -> bool:
        return self.decomposition is not None


def solve_ghd(
    H: Hypergraph,
    k: int,
    mode: str = "bip",
    c: int | None = None,
    assume_i: int | None = None,
    budget: int | None = None,
) -> GhdResult:
    """Decide ghw(H) <= k by augmenting H with subedges and searching for an HD.

    ``assume_i`` states the intersection bound the caller relies on; a
    negative verdict on an input that exceeds it is annotated UNSOUND-IF.
    """
    from .properties import c_miwidth, iwidth

    if mode not in ("bip", "bmip"):
        raise SolverError(f"unknown mode {mode!r}")
    i = iwidth(H)
    mi = None
    if mode == "bip":
        extra = f_bip(H, k, budget)
        measured = i
    else:
        if c is None:
            raise SolverError("bmip mode needs c")
        extra = g_bmip(H, k, c, budget)
        mi = c_miwidth(H, c)
        measured = mi
    H2 = augment(H, extra)
    D2 = solve_hd(H2, k)
    D = None
    if D2 is not None:
        D = lift_to_original(H, H2, D2).retag("GHD")
    note = ""
    if D is None and assume_i is not None and measured > assume_i:
        note = f"UNSOUND-IF measured {'iwidth' if mode == 'bip' else f'{c}-miwidth'} {measured} > assumed {assume_i}"
    label = mode if mode == "bip" else f"bmip:{c}"
    return GhdResult(D, label, i, mi, len(extra), note)
