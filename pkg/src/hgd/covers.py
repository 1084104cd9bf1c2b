"""Integral and fractional edge covers with exact arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .hypergraph import Hypergraph, HypergraphError, bits, popcount
from .lp import minimize

ZERO = Fraction(0)
ONE = Fraction(1)


class CoverError(ValueError):
    """A target vertex lies in no edge, or a weighting is malformed."""


@dataclass(frozen=True)
class EdgeWeighting:
    """Map from edge names to weights in [0, 1]; zero weights are dropped."""

    weights: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, w in self.weights.items():
            w = Fraction(w)
            if w < 0 or w > 1:
                raise CoverError(f"weight {w} on edge {e} outside [0,1]")
            if w:
                clean[e] = w
        object.__setattr__(self, "weights", clean)

    @classmethod
    def integral(cls, edges: Iterable[str]) -> "EdgeWeighting":
        return cls({e: ONE for e in edges})

    @property
    def kind(self) -> str:
        return "integral" if all(w == 1 for w in self.weights.values()) else "fractional"

    @property
    def support(self) -> list[str]:
        return list(self.weights)

    def full_edges(self) -> list[str]:
        """Edges carrying weight exactly 1."""
        return [e for e, w in self.weights.items() if w == 1]

    def restrict(self, edges: Iterable[str]) -> "EdgeWeighting":
        keep = set(edges)
        return EdgeWeighting({e: w for e, w in self.weights.items() if e in keep})

    def __getitem__(self, edge: str) -> Fraction:
        return self.weights.get(edge, ZERO)

    def __len__(self) -> int:
        return len(self.weights)

    def items(self):
        return self.weights.items()


def coverage(H: Hypergraph, theta: EdgeWeighting) -> int:
    """B(theta): vertices whose incident weight sums to at least 1."""
    load: dict[int, Fraction] = {}
    for e, w in theta.items():
        for v in bits(H.edge(e)):
            load[v] = load.get(v, ZERO) + w
    mask = 0
    for v, total in load.items():
        if total >= 1:
            mask |= 1 << v
    return mask


def weight(theta: EdgeWeighting) -> Fraction:
    return sum(theta.weights.values(), ZERO)


def _check_coverable(H: Hypergraph, target: int) -> None:
    if target & ~H.all_vertices:
        raise HypergraphError("target mentions unknown vertices")
    reach = 0
    for e in H.edge_masks:
        reach |= e
    missing = target & ~reach
    if missing:
        raise CoverError(f"vertex {H.names(missing)[0]} lies in no edge")


def _useful_traces(H: Hypergraph, target: int) -> list[tuple[int, int]]:
    """(edge index, trace) for traces on ``target`` not strictly dominated.

    Equal traces keep their lowest edge index.
    """
    first: dict[int, int] = {}
    for i, e in enumerate(H.edge_masks):
        t = e & target
        if t and t not in first:
            first[t] = i
    traces = sorted(first.items(), key=lambda kv: kv[1])
    out = []
    for t, i in traces:
        if any(o != t and t & o == t for o, _ in traces):
            continue
        out.append((i, t))
    return out


def optimal_fractional_cover(H: Hypergraph, target: int) -> tuple[EdgeWeighting, Fraction]:
    """Minimum-weight fractional edge cover of ``target`` (exact LP optimum)."""
    if not target:
        return EdgeWeighting(), ZERO
    cache = H._cache.setdefault("rho_star", {})
    hit = cache.get(target)
    if hit is not None:
        return hit
    _check_coverable(H, target)
    traces = _useful_traces(H, target)
    verts = list(bits(target))
    # dual packing LP: max sum y_v with sum_{v in e} y_v <= 1; primal weights
    # are the reduced costs of the packing slacks
    rows = [([1 if (t >> v) & 1 else 0 for v in verts], 1) for _, t in traces]
    res = minimize([-1] * len(verts), le_rows=rows)
    gamma = {}
    for (i, _), w in zip(traces, res.slack_costs):
        if w:
            gamma[H.edge_names[i]] = min(w, ONE)
    out = (EdgeWeighting(gamma), -res.value)
    cache[target] = out
    return out


def rho_star(H: Hypergraph, target: int) -> Fraction:
    return optimal_fractional_cover(H, target)[1]


def exists_fractional_cover(H: Hypergraph, target: int, bound) -> EdgeWeighting | None:
    """A fractional cover of ``target`` of weight at most ``bound``, if any."""
    bound = Fraction(bound)
    if bound < 0:
        raise CoverError("bound must be non-negative")
    if not target:
        return EdgeWeighting()
    reach = 0
    for e in H.edge_masks:
        reach |= e
    if target & ~reach:
        return None
    gamma, value = optimal_fractional_cover(H, target)
    return gamma if value <= bound else None


def fractional_cover_avoiding(
    H: Hypergraph, target: int, bound, avoid: Iterable[int]
) -> EdgeWeighting | None:
    """Like :func:`exists_fractional_cover`, but no edge in ``avoid`` may get weight 1.

    The feasible region is convex, so if every avoided edge can individually
    be kept below 1, the average of those witnesses keeps all of them below 1.
    """
    base = exists_fractional_cover(H, target, bound)
    if base is None:
        return None
    avoid = [i for i in avoid if H.edge_masks[i] & target]
    tight = [i for i in avoid if base[H.edge_names[i]] == 1]
    if not tight:
        return base
    cols = [i for i, e in enumerate(H.edge_masks) if e & target]
    pos = {i: j for j, i in enumerate(cols)}
    ge = [([1 if (H.edge_masks[i] >> v) & 1 else 0 for i in cols], 1) for v in bits(target)]
    le = [([1] * len(cols), Fraction(bound))]
    points = [{e: w for e, w in base.items()}]
    for i in tight:
        c = [0] * len(cols)
        c[pos[i]] = 1
        res = minimize(c, ge_rows=ge, le_rows=le)
        if res.status != "optimal" or res.value >= 1:
            return None
        points.append({H.edge_names[j]: min(x, ONE) for j, x in zip(cols, res.x) if x})
    total: dict[str, Fraction] = {}
    for p in points:
        for e, w in p.items():
            total[e] = total.get(e, ZERO) + w
    return EdgeWeighting({e: w / len(points) for e, w in total.items()})


def optimal_integral_cover(H: Hypergraph, target: int) -> tuple[EdgeWeighting, int]:
    """Minimum edge cover of ``target`` by branch and bound."""
    if not target:
        return EdgeWeighting(), 0
    cache = H._cache.setdefault("rho", {})
    hit = cache.get(target)
    if hit is not None:
        return hit
    _check_coverable(H, target)
    traces = _useful_traces(H, target)
    traces.sort(key=lambda it: (-popcount(it[1]), it[0]))

    # greedy incumbent
    greedy, left = [], target
    while left:
        i, t = max(traces, key=lambda it: (popcount(it[1] & left), -it[0]))
        greedy.append(i)
        left &= ~t
    best = [list(greedy)]
    lp_floor = math.ceil(rho_star(H, target))

    def lower(left: int) -> int:
        big = max(popcount(t & left) for _, t in traces)
        return -(-popcount(left) // big)

    def search(left: int, chosen: list[int]) -> None:
        if len(best[0]) == lp_floor:
            return
        if not left:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        if len(chosen) + lower(left) >= len(best[0]):
            return
        pivot = min(bits(left), key=lambda v: sum(1 for _, t in traces if (t >> v) & 1))
        options = [(i, t) for i, t in traces if (t >> pivot) & 1]
        options.sort(key=lambda it: (-popcount(it[1] & left), it[0]))
        for i, t in options:
            chosen.append(i)
            search(left & ~t, chosen)
            chosen.pop()

    search(target, [])
    chosen = sorted(best[0])
    out = (EdgeWeighting.integral(H.edge_names[i] for i in chosen), len(chosen))
    cache[target] = out
    return out


def rho(H: Hypergraph, target: int) -> int:
    return optimal_integral_cover(H, target)[1]


def degree_of(H: Hypergraph) -> int:
    counts = [0] * H.n
    for e in H.edge_masks:
        for v in bits(e):
            counts[v] += 1
    return max(counts, default=0)


def degree_round(H: Hypergraph, gamma: EdgeWeighting) -> EdgeWeighting:
    """Integral cover of B(gamma) using only edges of weight >= 1/degree.

    Picks the lowest uncovered vertex, then its heaviest incident edge
    (lowest index on ties), until B(gamma) is covered.
    """
    d = degree_of(H)
    if not gamma.weights:
        return EdgeWeighting()
    floor = Fraction(1, d)
    uncovered = coverage(H, gamma)
    chosen = []
    while uncovered:
        v = (uncovered & -uncovered).bit_length() - 1
        best = None
        for i, e in enumerate(H.edge_masks):
            if (e >> v) & 1:
                w = gamma[H.edge_names[i]]
                if w >= floor and (best is None or w > best[0]):
                    best = (w, i)
        if best is None:  # cannot happen for v in B(gamma)
            raise CoverError(f"vertex {H.vertices[v]} has no edge of weight >= 1/{d}")
        chosen.append(best[1])
        uncovered &= ~H.edge_masks[best[1]]
    return EdgeWeighting.integral(H.edge_names[i] for i in sorted(set(chosen)))
