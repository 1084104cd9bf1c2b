"""Immutable hypergraphs over dense vertex indices.

Vertex sets are Python ints used as bit vectors: bit ``i`` stands for
``H.vertices[i]``. All set algebra in the solvers runs on these masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

DEFAULT_VERTEX_CAP = 4096


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """Yield every non-empty submask of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A hypergraph with named vertices and named edges.

    ``parents`` maps the name of a generated subedge to the name of the
    original edge it was cut from; it is empty for plain input.
    """

    vertices: tuple[str, ...]
    edge_names: tuple[str, ...]
    edge_masks: tuple[int, ...]
    parents: Mapping[str, str] = field(default_factory=dict)
    duplicates: tuple[tuple[str, str], ...] = ()
    _vindex: dict = field(default_factory=dict, repr=False)
    _eindex: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._vindex:
            self._vindex.update({v: i for i, v in enumerate(self.vertices)})
        if not self._eindex:
            self._eindex.update({e: i for i, e in enumerate(self.edge_names)})

    # -- sizes and lookups -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edge_names)

    @property
    def all_vertices(self) -> int:
        return (1 << len(self.vertices)) - 1

    def vertex_index(self, name: str) -> int:
        try:
            return self._vindex[name]
        except KeyError:
            raise HypergraphError(f"unknown vertex {name!r}") from None

    def edge_index(self, name: str) -> int:
        try:
            return self._eindex[name]
        except KeyError:
            raise HypergraphError(f"unknown edge {name!r}") from None

    def has_edge(self, name: str) -> bool:
        return name in self._eindex

    def edge(self, name: str) -> int:
        """Vertex mask of the edge called ``name``."""
        return self.edge_masks[self.edge_index(name)]

    def vset(self, *names: str | Iterable[str]) -> int:
        """Mask for the given vertex names (strings or iterables of them)."""
        mask = 0
        for item in names:
            if isinstance(item, str):
                mask |= 1 << self.vertex_index(item)
            else:
                for v in item:
                    mask |= 1 << self.vertex_index(v)
        return mask

    def names(self, mask: int) -> list[str]:
        return [self.vertices[i] for i in bits(mask)]

    def edge_vertices(self, name: str) -> list[str]:
        return self.names(self.edge(name))

    def union(self, edge_ids: Iterable[int]) -> int:
        """V(E) for a collection of edge indices."""
        mask = 0
        for i in edge_ids:
            mask |= self.edge_masks[i]
        return mask

    def incident(self, mask: int) -> list[int]:
        """Indices of the edges meeting ``mask``, ascending."""
        return [i for i, e in enumerate(self.edge_masks) if e & mask]

    def distinct_edges(self) -> list[int]:
        """Dedup view: first edge index for every distinct vertex set."""
        cached = self._cache.get("distinct")
        if cached is None:
            seen: set[int] = set()
            cached = []
            for i, e in enumerate(self.edge_masks):
                if e not in seen:
                    seen.add(e)
                    cached.append(i)
            self._cache["distinct"] = cached
        return cached

    def original_edge(self, name: str) -> str:
        """Follow subedge provenance back to an input edge."""
        seen = set()
        while name in self.parents and name not in seen:
            seen.add(name)
            name = self.parents[name]
        return name

    def edge_list(self) -> list[tuple[str, list[str]]]:
        return [(n, self.names(e)) for n, e in zip(self.edge_names, self.edge_masks)]

    def same_edges(self, other: "Hypergraph") -> bool:
        """Equal as named set systems (vertex order and edge order ignored)."""
        mine = {n: frozenset(vs) for n, vs in self.edge_list()}
        theirs = {n: frozenset(vs) for n, vs in other.edge_list()}
        return mine == theirs and set(self.vertices) == set(other.vertices)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"

    # -- construction -------------------------------------------------------

    @classmethod
    def from_masks(
        cls,
        vertices: Sequence[str],
        edge_names: Sequence[str],
        edge_masks: Sequence[int],
        parents: Mapping[str, str] | None = None,
    ) -> "Hypergraph":
        seen: dict[int, str] = {}
        dups = []
        for name, mask in zip(edge_names, edge_masks):
            if mask in seen:
                dups.append((seen[mask], name))
            else:
                seen[mask] = name
        return cls(
            tuple(vertices),
            tuple(edge_names),
            tuple(edge_masks),
            dict(parents or {}),
            tuple(dups),
        )


@dataclass(frozen=True)
class Component:
    """A [V]-component: maximal [V]-connected vertex set outside ``separator``."""

    separator: int
    members: int

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(bits(self.members))


def build_hypergraph(
    edges: Iterable[tuple[str, Sequence[str]]], vertex_cap: int = DEFAULT_VERTEX_CAP
) -> Hypergraph:
    """Build a hypergraph from ``(edge id, vertex names)`` pairs.

    Vertices get dense indices in first-seen order.
    """
    vindex: dict[str, int] = {}
    names: list[str] = []
    masks: list[int] = []
    for edge_id, members in edges:
        if edge_id in names:
            raise HypergraphError(f"duplicate edge id {edge_id}")
        if not members:
            raise HypergraphError(f"empty edge {edge_id}")
        mask = 0
        for v in members:
            if v not in vindex:
                vindex[v] = len(vindex)
            mask |= 1 << vindex[v]
        names.append(edge_id)
        masks.append(mask)
    if len(vindex) > vertex_cap:
        raise HypergraphError(f"{len(vindex)} vertices exceed the cap of {vertex_cap}")
    return Hypergraph.from_masks(list(vindex), names, masks)


def edges_incident(H: Hypergraph, C: int) -> list[str]:
    """edges(C): names of the edges meeting ``C``."""
    if C & ~H.all_vertices:
        raise HypergraphError("vertex set mentions unknown vertices")
    return [H.edge_names[i] for i in H.incident(C)]


def grow_component(H: Hypergraph, start: int, allowed: int) -> int:
    """Closure of ``start`` under [complement of allowed]-adjacency."""
    comp = start
    while True:
        new = comp
        for e in H.edge_masks:
            if e & comp:
                new |= e & allowed
        if new == comp:
            return comp
        comp = new


def component_masks(H: Hypergraph, separator: int, within: int | None = None) -> list[int]:
    """[separator]-components as masks, optionally only those inside ``within``."""
    allowed = H.all_vertices & ~separator
    todo = allowed if within is None else allowed & within
    out = []
    while todo:
        low = todo & -todo
        comp = grow_component(H, low, allowed)
        todo &= ~comp
        if within is None or not comp & ~within:
            out.append(comp)
    out.sort(key=lambda c: tuple(bits(c)))
    return out


def components(H: Hypergraph, V: int) -> list[Component]:
    """All [V]-components of ``H``, sorted by canonical key."""
    if V & ~H.all_vertices:
        raise HypergraphError("separator mentions unknown vertices")
    return [Component(V, c) for c in component_masks(H, V)]


def boundary(H: Hypergraph, C: int) -> int:
    """Vertices outside ``C`` that share an edge with ``C``."""
    cached = H._cache.setdefault("boundary", {})
    out = cached.get(C)
    if out is None:
        out = 0
        for e in H.edge_masks:
            if e & C:
                out |= e
        out &= ~C
        cached[C] = out
    return out


def induced_sub(H: Hypergraph, V: int) -> Hypergraph:
    """Induced subhypergraph on ``V``.

    Edges are the distinct non-empty traces ``e & V``; each kept edge is
    named after the first original edge producing it, and ``parents``
    records that edge.
    """
    keep = list(bits(V))
    remap = {old: new for new, old in enumerate(keep)}
    names, masks, parents = [], [], {}
    seen = set()
    for name, e in zip(H.edge_names, H.edge_masks):
        trace = e & V
        if not trace or trace in seen:
            continue
        seen.add(trace)
        mask = 0
        for i in bits(trace):
            mask |= 1 << remap[i]
        names.append(name)
        masks.append(mask)
        parents[name] = name
    return Hypergraph.from_masks([H.vertices[i] for i in keep], names, masks, parents)


def edge_types(H: Hypergraph) -> list[int]:
    """Per vertex, the mask over edge indices containing it."""
    types = [0] * H.n
    for j, e in enumerate(H.edge_masks):
        for i in bits(e):
            types[i] |= 1 << j
    return types


def is_essential(H: Hypergraph) -> bool:
    types = edge_types(H)
    return len(set(types)) == len(types)


@dataclass(frozen=True)
class DualResult:
    hypergraph: Hypergraph
    non_essential: bool


def dual(H: Hypergraph) -> DualResult:
    """Dual hypergraph: vertices are H's edges, one edge per vertex of H.

    The dual edge for vertex ``v`` is named ``v``. Non-essential input is
    accepted but flagged, since two vertices with the same edge-type give
    duplicate dual edges.
    """
    types = edge_types(H)
    hd = Hypergraph.from_masks(H.edge_names, H.vertices, types)
    return DualResult(hd, len(set(types)) != len(types))


def reduce_essential(H: Hypergraph) -> tuple[Hypergraph, dict[str, str]]:
    """Delete vertices whose edge-type repeats an earlier vertex's.

    Returns the reduced hypergraph and a map from each deleted vertex to
    its kept representative (the first vertex with that edge-type).
    """
    types = edge_types(H)
    rep: dict[int, int] = {}
    merged: dict[str, str] = {}
    keep = 0
    for i, t in enumerate(types):
        if t in rep:
            merged[H.vertices[i]] = H.vertices[rep[t]]
        else:
            rep[t] = i
            keep |= 1 << i
    kept = list(bits(keep))
    remap = {old: new for new, old in enumerate(kept)}
    masks = []
    for e in H.edge_masks:
        mask = 0
        for i in bits(e & keep):
            mask |= 1 << remap[i]
        masks.append(mask)
    reduced = Hypergraph.from_masks([H.vertices[i] for i in kept], H.edge_names, masks, H.parents)
    return reduced, merged
