"""Slow, exhaustive reference implementations used to cross-check the solvers."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .covers import EdgeWeighting, optimal_fractional_cover, optimal_integral_cover
from .decomposition import DecompositionTree, Node
from .hypergraph import Hypergraph, bits, boundary, component_masks, submasks

ORACLE_VERTEX_CAP = 12


class OracleError(ValueError):
    pass


def _cost(H: Hypergraph, B: int, kind: str) -> Fraction:
    if kind == "FHD":
        return optimal_fractional_cover(H, B)[1]
    return Fraction(optimal_integral_cover(H, B)[1])


def _cover(H: Hypergraph, B: int, kind: str) -> EdgeWeighting:
    if kind == "FHD":
        return optimal_fractional_cover(H, B)[0]
    return optimal_integral_cover(H, B)[0]


def _bag_choices(H: Hypergraph, C: int, k: Fraction, kind: str):
    """Yield (bag, cover) candidates for component C, in a fixed order."""
    dC = boundary(H, C)
    if kind == "HD":
        for size in range(1, int(k) + 1):
            for combo in itertools.combinations(range(H.m), size):
                lam = H.union(combo)
                if dC & ~lam or not lam & C:
                    continue
                yield (lam & C) | dC, EdgeWeighting.integral(H.edge_names[i] for i in combo)
        return
    for X in sorted(submasks(C), key=lambda x: (x.bit_count(), x)):
        B = X | dC
        if _cost(H, B, kind) <= k:
            yield B, None


def brute_width(H: Hypergraph, k, kind: str) -> DecompositionTree | None:
    """Exhaustive search for a decomposition of width <= k, or None."""
    kind = kind.upper()
    if H.n > ORACLE_VERTEX_CAP:
        raise OracleError(f"oracle is capped at {ORACLE_VERTEX_CAP} vertices, got {H.n}")
    k = Fraction(k)
    if H.n == 0:
        return DecompositionTree(kind, [Node("n0", None, frozenset(), EdgeWeighting())])
    memo: dict[int, tuple | None] = {}

    def solve(C: int):
        if C in memo:
            return memo[C]
        memo[C] = None  # components strictly shrink, so no real cycles
        found = None
        for B, cover in _bag_choices(H, C, k, kind):
            subs = component_masks(H, B, within=C)
            if all(solve(sub) is not None for sub in subs):
                found = (B, cover, subs)
                break
        memo[C] = found
        return found

    if solve(H.all_vertices) is None:
        return None
    nodes: list[Node] = []

    def emit(C: int, parent: str | None) -> None:
        B, cover, subs = memo[C]
        nid = f"n{len(nodes)}"
        nodes.append(Node(nid, parent, frozenset(H.names(B)), cover or _cover(H, B, kind)))
        for sub in subs:
            emit(sub, nid)

    emit(H.all_vertices, None)
    return DecompositionTree(kind, nodes)


def brute_exact_width(H: Hypergraph, kind: str) -> Fraction:
    """Least width accepted by :func:`brute_width`.

    The optimum is the cost of some bag, so we search the sorted set of
    candidate bag costs.
    """
    kind = kind.upper()
    if kind == "HD":
        for k in range(1, H.m + 1):
            if brute_width(H, k, kind) is not None:
                return Fraction(k)
        raise OracleError("no hypertree decomposition found")
    values = sorted({_cost(H, B, kind) for B in submasks(H.all_vertices)})
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if brute_width(H, values[mid], kind) is not None:
            hi = mid
        else:
            lo = mid + 1
    return values[lo]


def elimination_width(H: Hypergraph, kind: str) -> Fraction:
    """ghw or fhw by trying every elimination ordering of the primal graph.

    Independent of the component recursion above; only sensible for a
    handful of vertices.
    """
    kind = kind.upper()
    if kind not in ("GHD", "FHD"):
        raise OracleError("elimination orderings only characterise GHD/FHD widths")
    if H.n > 8:
        raise OracleError("elimination oracle is capped at 8 vertices")
    adj = [0] * H.n
    for e in H.edge_masks:
        for v in bits(e):
            adj[v] |= e & ~(1 << v)
    best = None
    for order in itertools.permutations(range(H.n)):
        g = list(adj)
        alive = H.all_vertices
        worst = Fraction(0)
        for v in order:
            nb = g[v] & alive
            bag = nb | (1 << v)
            worst = max(worst, _cost(H, bag, kind))
            if best is not None and worst >= best:
                break
            for u in bits(nb):
                g[u] |= nb & ~(1 << u)
            alive &= ~(1 << v)
        if best is None or worst < best:
            best = worst
    return best if best is not None else Fraction(0)


def brute_shattered(H: Hypergraph, X: int) -> bool:
    """True iff the edge traces on X are all 2^|X| subsets of X."""
    if X.bit_count() > 20:
        raise OracleError("shattering check is capped at 20 vertices")
    traces = {e & X for e in H.edge_masks}
    return len(traces) == 1 << X.bit_count()
