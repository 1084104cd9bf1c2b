"""Text formats for hypergraphs and decompositions.

Hypergraph files hold atoms ``edge(v1,v2,...)`` each followed by ``,`` or
``.``; ``%`` starts a comment. Decomposition files look like::

    hgd-decomp 1
    kind GHD width 2/1
    node n0 parent - bag {a,b} cover {e1=1/1}
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .covers import EdgeWeighting
from .decomposition import KINDS, DecompositionError, DecompositionTree, Node, width
from .hypergraph import DEFAULT_VERTEX_CAP, Hypergraph, HypergraphError, build_hypergraph

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
_IDENT = re.compile(r"[^\s(),.%{}=]+")
_ASCII_IDENT = re.compile(r"[A-Za-z0-9_:\-'~+]+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line} col {col}: {message}")
        self.line = line
        self.col = col


class _Scanner:
    def __init__(self, text: str):
        self.text = text.replace("\r\n", "\n").replace("\r", "\n")
        self.pos = 0

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message: str):
        raise ParseError(message, *self.where())

    def skip(self) -> None:
        t = self.text
        while self.pos < len(t):
            ch = t[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "%":
                nl = t.find("\n", self.pos)
                self.pos = len(t) if nl < 0 else nl
            else:
                return

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def ident(self, what: str) -> str:
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        name = m.group()
        if not _ASCII_IDENT.fullmatch(name):
            log.warning("identifier %r is not plain ASCII", name)
        return name

    def expect(self, chars: str) -> str:
        self.skip()
        if self.pos < len(self.text) and self.text[self.pos] in chars:
            ch = self.text[self.pos]
            self.pos += 1
            return ch
        self.fail("expected " + " or ".join(repr(c) for c in chars))


def parse_hypergraph(text: str, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Hypergraph:
    sc = _Scanner(text)
    edges: list[tuple[str, list[str]]] = []
    seen: set[str] = set()
    while not sc.at_end():
        start = sc.where()
        name = sc.ident("edge identifier")
        if name in seen:
            raise ParseError(f"duplicate edge id {name}", *start)
        seen.add(name)
        sc.expect("(")
        members: list[str] = []
        sc.skip()
        if sc.text.startswith(")", sc.pos):
            raise ParseError(f"empty edge {name}", *start)
        while True:
            members.append(sc.ident("vertex identifier"))
            if sc.expect(",)") == ")":
                break
        sc.expect(",.")
        edges.append((name, list(dict.fromkeys(members))))
    return build_hypergraph(edges, vertex_cap)


def read_hypergraph(path: str | Path, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(encoding="utf-8"), vertex_cap)


def write_hypergraph(H: Hypergraph) -> str:
    return "".join(f"{name}({','.join(vs)}).\n" for name, vs in H.edge_list())


# -- decompositions ----------------------------------------------------------


def format_fraction(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        if "/" in text:
            p, q = text.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational p/q: {text!r}") from None


def write_decomposition(D: DecompositionTree) -> str:
    if not D.nodes:
        raise DecompositionError("decomposition has no nodes")
    lines = [f"hgd-decomp {FORMAT_VERSION}", f"kind {D.kind} width {format_fraction(width(D))}"]
    for nd in D.preorder():
        bag = ",".join(sorted(nd.bag))
        cover = ",".join(f"{e}={format_fraction(w)}" for e, w in sorted(nd.cover.items()))
        parent = "-" if nd.parent is None else nd.parent
        lines.append(f"node {nd.id} parent {parent} bag {{{bag}}} cover {{{cover}}}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(
    r"node\s+(?P<id>\S+)\s+parent\s+(?P<parent>\S+)\s+bag\s+\{(?P<bag>[^}]*)\}\s+cover\s+\{(?P<cover>[^}]*)\}\s*$"
)
_KIND = re.compile(r"kind\s+(?P<kind>\S+)\s+width\s+(?P<width>\S+)\s*$")


@dataclass
class DecompositionFile:
    tree: DecompositionTree
    declared_width: Fraction
    warnings: list[str] = field(default_factory=list)


def _split(body: str) -> list[str]:
    return [x.strip() for x in body.split(",") if x.strip()]


def parse_decomposition(text: str) -> DecompositionFile:
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    kind = declared = None
    nodes: list[Node] = []
    for no, raw in enumerate(lines, 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if line.startswith("hgd-decomp"):
            parts = line.split()
            if len(parts) != 2 or parts[1] != str(FORMAT_VERSION):
                raise ParseError(f"unsupported format version {' '.join(parts[1:])!r}", no, 1)
            continue
        m = _KIND.match(line)
        if m:
            if kind is not None:
                raise ParseError("second kind header", no, 1)
            kind = m.group("kind").upper()
            if kind not in KINDS:
                raise ParseError(f"unknown kind {kind}", no, m.start("kind") + 1)
            try:
                declared = parse_fraction(m.group("width"))
            except ValueError as exc:
                raise ParseError(str(exc), no, m.start("width") + 1) from None
            continue
        m = _NODE.match(line)
        if not m:
            raise ParseError("expected a kind header or a node record", no, 1)
        if kind is None:
            raise ParseError("node record before the kind header", no, 1)
        weights = {}
        for item in _split(m.group("cover")):
            if "=" not in item:
                raise ParseError(f"cover entry {item!r} lacks '='", no, m.start("cover") + 1)
            e, w = item.split("=", 1)
            try:
                weights[e.strip()] = parse_fraction(w.strip())
            except ValueError as exc:
                raise ParseError(str(exc), no, m.start("cover") + 1) from None
        parent = m.group("parent")
        nodes.append(
            Node(m.group("id"), None if parent == "-" else parent, frozenset(_split(m.group("bag"))), EdgeWeighting(weights))
        )
    if kind is None:
        raise ParseError("missing kind header", 1, 1)
    if not nodes:
        raise ParseError("decomposition has no nodes", 1, 1)
    tree = DecompositionTree(kind, nodes)
    warnings = []
    if width(tree) != declared:
        warnings.append(f"declared width {format_fraction(declared)} differs from computed {format_fraction(width(tree))}")
    return DecompositionFile(tree, declared, warnings)


def read_decomposition(path: str | Path) -> DecompositionFile:
    return parse_decomposition(Path(path).read_text(encoding="utf-8"))
