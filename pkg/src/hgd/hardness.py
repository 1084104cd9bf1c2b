"""Instance generator for the 3SAT reduction to width-2 decompositions.

Vertex names are file-safe: ``S:i:j:k:t`` stands for the element
(q | k, t) with q = (i, j); ``A:i:j`` / ``Ap:i:j`` for a_p / a'_p;
``y:i`` / ``yp:i`` for y_i / y'_i; gadget vertices are ``a1`` ... ``d2``
with a ``p`` suffix in the primed copy.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .covers import EdgeWeighting
from .decomposition import DecompositionTree, Node
from .hypergraph import Hypergraph, HypergraphError, build_hypergraph

GADGET_VERTICES = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")
EXPECTED_UNSAT_TAG = "EXPECTED-WIDTH>2-UNVERIFIED"

Literal = tuple[int, bool]  # (variable index, positive?)


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        if not self.clauses:
            raise FormulaError("formula needs at least one clause")
        for j, cl in enumerate(self.clauses, 1):
            if len(cl) != 3:
                raise FormulaError(f"clause {j} has {len(cl)} literals, expected 3")
            for var, _ in cl:
                if not 1 <= var <= self.n:
                    raise FormulaError(f"clause {j} mentions x{var} outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @classmethod
    def of(cls, n: int, clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        """From DIMACS-style signed integers, e.g. ``[[1, -2, 3]]``."""
        return cls(n, tuple(tuple((abs(x), x > 0) for x in cl) for cl in clauses))

    def falsified(self, sigma: Mapping[int, bool]) -> int | None:
        """1-based index of the first clause σ falsifies, or None."""
        for j, cl in enumerate(self.clauses, 1):
            if not any(sigma[v] == pos for v, pos in cl):
                return j
        return None

    def models(self) -> Iterable[dict[int, bool]]:
        for bits in itertools.product((False, True), repeat=self.n):
            sigma = {i + 1: b for i, b in enumerate(bits)}
            if self.falsified(sigma) is None:
                yield sigma

    def satisfiable(self) -> bool:
        return next(iter(self.models()), None) is not None

    def __str__(self) -> str:
        lit = lambda v, p: f"x{v}" if p else f"~x{v}"  # noqa: E731
        return " & ".join("(" + " | ".join(lit(v, p) for v, p in cl) + ")" for cl in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    n = None
    nums: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) < 4 or parts[1] != "cnf":
                raise FormulaError(f"bad problem line {line!r}")
            n = int(parts[2])
            continue
        try:
            nums.extend(int(tok) for tok in line.split())
        except ValueError:
            raise FormulaError(f"bad clause line {line!r}") from None
    clauses, cur = [], []
    for x in nums:
        if x == 0:
            clauses.append(cur)
            cur = []
        else:
            cur.append(x)
    if cur:
        clauses.append(cur)
    if n is None:
        n = max((abs(x) for cl in clauses for x in cl), default=0)
    return CnfFormula.of(n, clauses)


_LIT = re.compile(r"\s*(~|!|-|¬)?\s*x(\d+)\s*")


def parse_formula(text: str) -> CnfFormula:
    """Parse ``(x1 | ~x2 | x3) & (~x1 | x2 | ~x3)``."""
    clauses = []
    for part in re.split(r"[&∧]", text):
        part = part.strip().strip("()")
        if not part:
            continue
        lits = []
        for tok in re.split(r"[|∨]", part):
            m = _LIT.fullmatch(tok)
            if not m:
                raise FormulaError(f"cannot read literal {tok.strip()!r}")
            lits.append(int(m.group(2)) * (-1 if m.group(1) else 1))
        clauses.append(lits)
    n = max((abs(x) for cl in clauses for x in cl), default=0)
    return CnfFormula.of(n, clauses)


def parse_assignment(text: str, n: int) -> dict[int, bool]:
    """``"1,0,0"`` / ``"TFF"`` / ``"1 -2 -3"`` (DIMACS style)."""
    text = text.strip()
    if re.fullmatch(r"[01TFtf]+", text.replace(",", "").replace(" ", "")):
        vals = [c in "1Tt" for c in text.replace(",", "").replace(" ", "")]
        if len(vals) != n:
            raise FormulaError(f"assignment has {len(vals)} values, formula has {n} variables")
        return {i + 1: v for i, v in enumerate(vals)}
    sigma = {}
    for tok in re.split(r"[\s,]+", text):
        if tok:
            x = int(tok)
            sigma[abs(x)] = x > 0
    if set(sigma) != set(range(1, n + 1)):
        raise FormulaError("assignment must fix every variable exactly once")
    return sigma


def random_3cnf(rng: random.Random, n: int, m: int) -> CnfFormula:
    clauses = []
    for _ in range(m):
        vars_ = rng.sample(range(1, n + 1), 3) if n >= 3 else [rng.randint(1, n) for _ in range(3)]
        clauses.append(tuple((v, rng.random() < 0.5) for v in vars_))
    return CnfFormula(n, tuple(clauses))


# -- gadget -------------------------------------------------------------------


def gadget_edges(M1: Sequence[str], M2: Sequence[str], suffix: str = "") -> list[tuple[str, list[str]]]:
    """The 16 edges E_A, E_B, E_C over a1..d2 (with ``suffix``) and M1, M2."""
    g = {v: v + suffix for v in GADGET_VERTICES}
    M1, M2 = list(M1), list(M2)
    specs = [
        ("A", [["a1", "b1", M1], ["a2", "b2", M2], ["a1", "b2"], ["a2", "b1"], ["a1", "a2"]]),
        ("B", [["b1", "c1", M1], ["b2", "c2", M2], ["b1", "c2"], ["b2", "c1"], ["b1", "b2"], ["c1", "c2"]]),
        ("C", [["c1", "d1", M1], ["c2", "d2", M2], ["c1", "d2"], ["c2", "d1"], ["d1", "d2"]]),
    ]
    out = []
    for fam, edges in specs:
        for idx, parts in enumerate(edges, 1):
            members = []
            for p in parts:
                members.extend(p if isinstance(p, list) else [g[p]])
            out.append((f"E{fam}{idx}{suffix}", members))
    return out


def gadget_h0(M1: Sequence[str], M2: Sequence[str]) -> Hypergraph:
    if set(M1) & set(M2):
        raise HypergraphError("M1 and M2 must be disjoint")
    clash = (set(M1) | set(M2)) & set(GADGET_VERTICES)
    if clash:
        raise HypergraphError(f"M sets use reserved gadget names: {sorted(clash)}")
    return build_hypergraph(gadget_edges(M1, M2))


# -- reduction ----------------------------------------------------------------


def s_name(q: tuple[int, int], k: int, t: int) -> str:
    return f"S:{q[0]}:{q[1]}:{k}:{t}"


@dataclass
class ReductionLayout:
    formula: CnfFormula
    positions: list[tuple[int, int]]  # [2n+3; m] in lexicographic order
    Q: list[tuple[int, int]]
    families: dict[str, list[str]] = field(default_factory=dict)

    @property
    def min(self) -> tuple[int, int]:
        return self.positions[0]

    @property
    def max(self) -> tuple[int, int]:
        return self.positions[-1]

    @property
    def inner(self) -> list[tuple[int, int]]:
        """[2n+3; m] without its last element."""
        return self.positions[:-1]

    def S_p(self, q) -> list[str]:
        return [s_name(q, k, t) for k in (1, 2, 3) for t in (0, 1)]

    def A_upto(self, p, prime=False) -> list[str]:
        tag = "Ap" if prime else "A"
        idx = self.positions.index(p)
        return [f"{tag}:{i}:{j}" for i, j in self.positions[: idx + 1]]

    def A_from(self, p, prime=False) -> list[str]:
        tag = "Ap" if prime else "A"
        idx = self.positions.index(p)
        return [f"{tag}:{i}:{j}" for i, j in self.positions[idx:]]

    def as_text(self) -> str:
        lines = [f"formula: {self.formula}", f"n: {self.formula.n}", f"m: {self.formula.m}"]
        for name, members in self.families.items():
            lines.append(f"{name}: {','.join(members)}")
        return "\n".join(lines) + "\n"


def _layout(phi: CnfFormula) -> ReductionLayout:
    n, m = phi.n, phi.m
    positions = [(i, j) for i in range(1, 2 * n + 4) for j in range(1, m + 1)]
    Q = positions + [(0, 1), (0, 0), (1, 0)]
    lay = ReductionLayout(phi, positions, Q)
    S = [s_name(q, k, t) for q in Q for k in (1, 2, 3) for t in (0, 1)]
    f = lay.families
    f["S"] = S
    f["A"] = [f"A:{i}:{j}" for i, j in positions]
    f["Ap"] = [f"Ap:{i}:{j}" for i, j in positions]
    f["Y"] = [f"y:{i}" for i in range(1, n + 1)]
    f["Yp"] = [f"yp:{i}" for i in range(1, n + 1)]
    f["z"] = ["z1", "z2"]
    f["gadget"] = list(GADGET_VERTICES)
    f["gadget_p"] = [v + "p" for v in GADGET_VERTICES]
    S01, S10 = set(lay.S_p((0, 1))), set(lay.S_p((1, 0)))
    f["M1"] = [s for s in S if s not in S01] + ["z1"]
    f["M2"] = f["Y"] + [s for s in S if s in S01] + ["z2"]
    f["M1p"] = [s for s in S if s not in S10] + ["z1"]
    f["M2p"] = f["Yp"] + [s for s in S if s in S10] + ["z2"]
    return lay


def reduce_3sat(phi: CnfFormula) -> tuple[Hypergraph, ReductionLayout]:
    lay = _layout(phi)
    f = lay.families
    S, Y, Yp = f["S"], f["Y"], f["Yp"]
    edges = gadget_edges(f["M1"], f["M2"]) + gadget_edges(f["M1p"], f["M2p"], "p")
    for p in lay.inner:
        edges.append((f"ep:{p[0]}:{p[1]}", lay.A_upto(p, True) + lay.A_from(p)))
    for i in range(1, phi.n + 1):
        edges.append((f"ey:{i}", [f"y:{i}", f"yp:{i}"]))
    for p in lay.inner:
        clause = phi.clauses[p[1] - 1]
        for k, (var, pos) in enumerate(clause, 1):
            s1 = s_name(p, k, 1)
            y0 = Y if pos else [y for y in Y if y != f"y:{var}"]
            y1 = [y for y in Yp if y != f"yp:{var}"] if pos else Yp
            e0 = lay.A_from(p) + [s for s in S if s != s1] + y0 + ["z1"]
            e1 = lay.A_upto(p, True) + [s1] + y1 + ["z2"]
            edges.append((f"e:{k}:0:{p[0]}:{p[1]}", e0))
            edges.append((f"e:{k}:1:{p[0]}:{p[1]}", e1))
    S00, Smax = set(lay.S_p((0, 0))), set(lay.S_p(lay.max))
    edges.append(("e0:0:0", ["a1"] + f["A"] + [s for s in S if s not in S00] + Y + ["z1"]))
    edges.append(("e1:0:0", [s for s in S if s in S00] + Yp + ["z2"]))
    edges.append(("e0:max", [s for s in S if s not in Smax] + Y + ["z1"]))
    edges.append(("e1:max", ["a1p"] + f["Ap"] + [s for s in S if s in Smax] + Yp + ["z2"]))
    # keep a canonical vertex order: the families, in declaration order
    order = S + f["A"] + f["Ap"] + Y + Yp + ["z1", "z2"] + f["gadget"] + f["gadget_p"]
    index = {v: i for i, v in enumerate(order)}
    masks = [sum(1 << index[v] for v in vs) for _, vs in edges]
    H = Hypergraph.from_masks(order, [n for n, _ in edges], masks)
    return H, lay


def complementary_pairs(lay: ReductionLayout) -> list[tuple[str, str]]:
    pairs = [("EA1", "EA2"), ("EB1", "EB2"), ("EC1", "EC2"), ("EA1p", "EA2p"), ("EB1p", "EB2p"), ("EC1p", "EC2p")]
    for p in lay.inner:
        for k in (1, 2, 3):
            pairs.append((f"e:{k}:0:{p[0]}:{p[1]}", f"e:{k}:1:{p[0]}:{p[1]}"))
    pairs += [("e0:0:0", "e1:0:0"), ("e0:max", "e1:max")]
    return pairs


def expected_counts(phi: CnfFormula) -> tuple[int, int]:
    """(|V|, |E|) from the closed forms of the construction."""
    n, m = phi.n, phi.m
    P = (2 * n + 3) * m
    q = P + 3
    V = 6 * q + 2 * P + 2 * n + 2 + 16
    E = 32 + (P - 1) * 7 + n + 4
    return V, E


def witness_ghd(phi: CnfFormula, sigma: Mapping[int, bool]) -> DecompositionTree:
    """The width-2 path GHD for a satisfying assignment."""
    bad = phi.falsified(sigma)
    if bad is not None:
        raise FormulaError(f"assignment falsifies clause {bad}")
    lay = _layout(phi)
    f = lay.families
    S, Y, Yp, zz = f["S"], f["Y"], f["Yp"], ["z1", "z2"]
    Z = [f"y:{i}" if sigma[i] else f"yp:{i}" for i in range(1, phi.n + 1)]
    k_of = {}
    for j, clause in enumerate(phi.clauses, 1):
        k_of[j] = next(k for k, (v, pos) in enumerate(clause, 1) if sigma[v] == pos)

    rows: list[tuple[str, list[str], list[str]]] = []
    for X, lo, hi in (("C", "d", "c"), ("B", "c", "b"), ("A", "b", "a")):
        bag = [f"{lo}1", f"{lo}2", f"{hi}1", f"{hi}2"] + Y + S + zz
        rows.append((f"u{X}", bag, [f"E{X}1", f"E{X}2"]))
    rows.append(("u_min-1", ["a1"] + f["A"] + Y + S + Z + zz, ["e0:0:0", "e1:0:0"]))
    for p in lay.inner:
        k = k_of[p[1]]
        bag = lay.A_upto(p, True) + lay.A_from(p) + S + Z + zz
        rows.append((f"u:{p[0]}:{p[1]}", bag, [f"e:{k}:0:{p[0]}:{p[1]}", f"e:{k}:1:{p[0]}:{p[1]}"]))
    rows.append(("u_max", ["a1p"] + f["Ap"] + Yp + S + Z + zz, ["e0:max", "e1:max"]))
    for X, lo, hi in (("A", "a", "b"), ("B", "b", "c"), ("C", "c", "d")):
        bag = [f"{lo}1p", f"{lo}2p", f"{hi}1p", f"{hi}2p"] + Yp + S + zz
        rows.append((f"u{X}p", bag, [f"E{X}1p", f"E{X}2p"]))
    nodes = []
    parent = None
    for nid, bag, lam in rows:
        nodes.append(Node(nid, parent, frozenset(bag), EdgeWeighting.integral(lam)))
        parent = nid
    return DecompositionTree("GHD", nodes)


def witness_z(phi: CnfFormula, sigma: Mapping[int, bool]) -> list[str]:
    return [f"y:{i}" if sigma[i] else f"yp:{i}" for i in range(1, phi.n + 1)]


# -- padding ------------------------------------------------------------------


def pad_width(H: Hypergraph, l: int, q: int = 0) -> Hypergraph:
    """Add fresh vertices that raise every width by a fixed amount.

    q = 0: a clique on 2l fresh vertices. q >= 1 (needs l > q): l fresh
    vertices with all pairs plus the cyclic windows of length q. Every fresh
    vertex also gets a binary edge to every old vertex.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    if q < 0:
        raise ValueError("q must be non-negative")
    if q >= 1 and l <= q:
        raise ValueError("rational padding needs l > q")
    count = 2 * l if q == 0 else l
    taken = set(H.vertices)
    fresh = []
    i = 1
    while len(fresh) < count:
        name = f"pad{i}"
        if name not in taken:
            fresh.append(name)
        i += 1
    edges = H.edge_list()
    names = set(H.edge_names)

    def add(stem: str, vs: list[str]) -> None:
        name = stem
        while name in names:
            name += "_"
        names.add(name)
        edges.append((name, vs))

    for a, b in itertools.combinations(range(count), 2):
        add(f"pk:{a + 1}:{b + 1}", [fresh[a], fresh[b]])
    if q >= 1:
        for a in range(count):
            window = [fresh[(a + t) % count] for t in range(q)]
            add(f"pw:{a + 1}", window)
    for a in range(count):
        for v in H.vertices:
            add(f"px:{a + 1}:{v}", [fresh[a], v])
    return build_hypergraph(edges)
