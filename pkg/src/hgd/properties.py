"""Structural measures of hypergraphs and corpus-level histograms."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .hypergraph import Hypergraph, bits

DEFAULT_VC_CAP = 16
BUCKETS = ("0", "1", "2", "3", "4", "5", ">5")


def _edges(H: Hypergraph, count_duplicates: bool) -> list[int]:
    if count_duplicates:
        return list(H.edge_masks)
    return [H.edge_masks[i] for i in H.distinct_edges()]


def degree(H: Hypergraph) -> int:
    counts = [0] * H.n
    for e in H.edge_masks:
        for v in bits(e):
            counts[v] += 1
    return max(counts, default=0)


def rank(H: Hypergraph) -> int:
    return max((e.bit_count() for e in H.edge_masks), default=0)


def iwidth(H: Hypergraph, count_duplicates: bool = False) -> int:
    return c_miwidth(H, 2, count_duplicates)


def c_miwidth(H: Hypergraph, c: int, count_duplicates: bool = False) -> int:
    """Largest intersection of c pairwise distinct edges (0 if there are fewer)."""
    if c < 1:
        raise ValueError("c must be at least 1")
    edges = _edges(H, count_duplicates)
    if len(edges) < c:
        return 0
    best = 0

    def dfs(start: int, depth: int, running: int) -> None:
        nonlocal best
        if depth == c:
            best = max(best, running.bit_count())
            return
        for j in range(start, len(edges) - (c - depth) + 1):
            nxt = edges[j] & running
            # intersections only shrink, so stop at or below the incumbent
            if nxt.bit_count() > best:
                dfs(j + 1, depth + 1, nxt)

    dfs(0, 0, -1)
    return best


def vc_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get("HGD_VC_CAP", DEFAULT_VC_CAP))


def vc_dimension(H: Hypergraph, cap: int | None = None) -> int | None:
    """Exact VC dimension, or None when |V(H)| exceeds the cap."""
    if H.n > vc_cap(cap):
        return None
    edges = set(H.edge_masks)
    if not edges:
        return 0

    def shattered(X: int) -> bool:
        return len({e & X for e in edges}) == 1 << X.bit_count()

    # every subset of a shattered set is shattered, so grow level by level
    level = [1 << v for v in range(H.n) if shattered(1 << v)]
    d = 0
    while level:
        d += 1
        if 1 << (d + 1) > len(edges):
            break
        nxt = set()
        current = set(level)
        for X in level:
            top = X.bit_length()
            for v in range(top, H.n):
                Y = X | (1 << v)
                if all(Y & ~(1 << u) in current for u in bits(X)) and shattered(Y):
                    nxt.add(Y)
        level = sorted(nxt)
    return d


@dataclass
class PropertyReport:
    instance: str
    vertices: int
    edges: int
    degree: int
    iwidth: int
    miwidth: dict[int, int]
    vc_dim: int | None
    rank: int

    def row(self, cs: Sequence[int]) -> list[str]:
        vc = "" if self.vc_dim is None else str(self.vc_dim)
        return [self.instance, str(self.degree), str(self.iwidth)] + [str(self.miwidth[c]) for c in cs] + [vc, str(self.rank)]


def analyze(
    H: Hypergraph, name: str = "", cs: Sequence[int] = (3, 4), cap: int | None = None, count_duplicates: bool = False
) -> PropertyReport:
    return PropertyReport(
        instance=name,
        vertices=H.n,
        edges=H.m,
        degree=degree(H),
        iwidth=iwidth(H, count_duplicates),
        miwidth={c: c_miwidth(H, c, count_duplicates) for c in cs},
        vc_dim=vc_dimension(H, cap),
        rank=rank(H),
    )


def bucket(value: int) -> str:
    return str(value) if value <= 5 else ">5"


@dataclass
class CorpusReport:
    cs: tuple[int, ...]
    reports: list[PropertyReport] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    def columns(self) -> list[str]:
        return ["instance", "degree", "iwidth"] + [f"miwidth_c{c}" for c in self.cs] + ["vc_dim", "rank"]

    def properties(self) -> list[str]:
        return ["degree", "iwidth"] + [f"miwidth_c{c}" for c in self.cs] + ["vc_dim"]

    def _values(self, prop: str) -> list[int]:
        out = []
        for r in self.reports:
            if prop.startswith("miwidth_c"):
                out.append(r.miwidth[int(prop[9:])])
            elif prop == "vc_dim":
                if r.vc_dim is not None:
                    out.append(r.vc_dim)
            else:
                out.append(getattr(r, prop))
        return out

    def histogram(self) -> dict[str, dict[str, int]]:
        table = {}
        for prop in self.properties():
            counts = dict.fromkeys(BUCKETS, 0)
            for v in self._values(prop):
                counts[bucket(v)] += 1
            table[prop] = counts
        return table

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns())
        for r in self.reports:
            w.writerow(r.row(self.cs))
        return buf.getvalue()

    def histogram_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i"] + self.properties())
        hist = self.histogram()
        for b in BUCKETS:
            w.writerow([b] + [hist[p][b] for p in self.properties()])
        return buf.getvalue()

    def text_table(self) -> str:
        props = self.properties()
        hist = self.histogram()
        widths = [max(len(p), 6) for p in props]
        lines = ["i    " + "  ".join(p.rjust(w) for p, w in zip(props, widths))]
        for b in BUCKETS:
            lines.append(b.ljust(5) + "  ".join(str(hist[p][b]).rjust(w) for p, w in zip(props, widths)))
        for path, msg in self.errors:
            lines.append(f"error {path}: {msg}")
        return "\n".join(lines) + "\n"


def _analyze_path(args) -> tuple[str, PropertyReport | None, str | None]:
    from .fileio import read_hypergraph

    path, cs, cap, dup = args
    try:
        H = read_hypergraph(path)
    except (OSError, ValueError) as exc:
        return path, None, str(exc)
    return path, analyze(H, Path(path).stem, cs, cap, dup), None


def analyze_corpus(
    paths: Sequence[str | Path],
    cs: Sequence[int] = (3, 4),
    cap: int | None = None,
    jobs: int = 1,
    count_duplicates: bool = False,
) -> CorpusReport:
    """Per-file properties in input order; unreadable files become error records."""
    cap = vc_cap(cap)
    work = [(str(p), tuple(cs), cap, count_duplicates) for p in paths]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_analyze_path, work))
    else:
        results = [_analyze_path(w) for w in work]
    report = CorpusReport(tuple(cs))
    for path, rep, err in results:
        if rep is None:
            report.errors.append((path, err))
        else:
            report.reports.append(rep)
    return report


def hn_family(n: int) -> Hypergraph:
    """H_n: vertices v1..vn, one edge V minus {vi} per i."""
    from .hypergraph import build_hypergraph

    vs = [f"v{i}" for i in range(1, n + 1)]
    return build_hypergraph([(f"e{i}", [v for v in vs if v != vs[i - 1]]) for i in range(1, n + 1)])

