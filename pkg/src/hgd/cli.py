"""Command line entry point ``hgd``.

Exit codes: 0 accept / success, 1 reject or invalid decomposition,
2 malformed input, 3 subedge budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from .approx import bound_report, fhd_to_ghd_bagwise, fhd_to_ghd_degree
from .decomposition import DecompositionTree, check_weak_special, validate, width
from .fhd import parse_rational, solve_fhd
from .fileio import format_fraction, read_decomposition, read_hypergraph, write_decomposition, write_hypergraph
from .ghd import BudgetExceeded, solve_ghd
from .hardness import (
    EXPECTED_UNSAT_TAG,
    gadget_h0,
    parse_assignment,
    parse_dimacs,
    parse_formula,
    random_3cnf,
    reduce_3sat,
    witness_ghd,
)
from .hd import solve_hd
from .properties import analyze_corpus

EXIT_OK, EXIT_REJECT, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("hgd")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("c values must be positive")
    return vals


def _names(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


# -- commands -----------------------------------------------------------------


def cmd_analyze(args) -> int:
    report = analyze_corpus(args.files, args.c, args.vc_cap, args.jobs, args.count_duplicate_edges)
    if args.csv:
        sys.stdout.write(report.csv())
    else:
        sys.stdout.write(report.text_table())
    if args.figure:
        from .plotting import write_figures

        out = Path(args.figure)
        out.mkdir(parents=True, exist_ok=True)
        (out / "properties.csv").write_text(report.csv(), encoding="utf-8")
        (out / "histogram.csv").write_text(report.histogram_csv(), encoding="utf-8")
        for path in write_figures(report, out):
            log.info("wrote %s", path)
    for path, msg in report.errors:
        print(f"error: {path}: {msg}", file=sys.stderr)
    return EXIT_INPUT if report.errors and not report.reports else EXIT_OK


def cmd_solve(args) -> int:
    H = read_hypergraph(args.file)
    k = parse_rational(args.k)
    note = ""
    if args.kind == "hd":
        if k.denominator != 1:
            raise ValueError("HD width bound must be an integer")
        D = solve_hd(H, int(k))
    elif args.kind == "ghd":
        if k.denominator != 1:
            raise ValueError("GHD width bound must be an integer")
        mode, c = args.mode, None
        if mode.startswith("bmip:"):
            mode, c = "bmip", int(mode.split(":", 1)[1])
        res = solve_ghd(H, int(k), mode, c, args.assume_i, args.budget)
        D, note = res.decomposition, res.note
    else:
        c = args.c if args.c == "auto" else int(args.c)
        res = solve_fhd(H, k, c, args.rank_mode, args.budget)
        D, note = res.decomposition, res.note
        if res.accepted:
            print(f"c: {res.c_used}", file=sys.stderr)
    if note:
        print(note, file=sys.stderr)
    if D is None:
        print(f"reject: no {args.kind.upper()} of width <= {format_fraction(k)}", file=sys.stderr)
        return EXIT_REJECT
    print(f"accept: width {format_fraction(width(D))}", file=sys.stderr)
    _emit(write_decomposition(D), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    H = read_hypergraph(args.hypergraph)
    dfile = read_decomposition(args.decomposition)
    for w in dfile.warnings:
        print(f"warning: {w}", file=sys.stderr)
    D: DecompositionTree = dfile.tree
    if args.kind:
        D = D.retag(args.kind.upper())
    problems = validate(H, D, parse_rational(args.k) if args.k else None)
    if args.weak_special:
        problems += check_weak_special(H, D)
    for v in problems:
        print(f"{v.condition} {v.node or '-'} {v.witness}")
    if problems:
        return EXIT_REJECT
    print(f"valid {D.kind} width {format_fraction(width(D))}")
    return EXIT_OK


def cmd_gen_3sat(args) -> int:
    if args.dimacs:
        phi = parse_dimacs(Path(args.dimacs).read_text(encoding="utf-8"))
    elif args.formula:
        phi = parse_formula(args.formula)
    else:
        n, m = _int_list(args.random)[:2]
        phi = random_3cnf(random.Random(args.seed), n, m)
    H, lay = reduce_3sat(phi)
    sat = phi.satisfiable()
    header = f"% reduction of {phi}\n"
    if not sat:
        header += f"% {EXPECTED_UNSAT_TAG}\n"
    layout = lay.as_text() + ("" if sat else f"tag: {EXPECTED_UNSAT_TAG}\n")
    witness = None
    if args.emit_witness:
        if args.assignment:
            sigma = parse_assignment(args.assignment, phi.n)
        else:
            sigma = next(iter(phi.models()), None)
            if sigma is None:
                print("formula is unsatisfiable; no witness to emit", file=sys.stderr)
        if sigma is not None:
            witness = write_decomposition(witness_ghd(phi, sigma))
    if args.out:
        prefix = Path(args.out)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        Path(f"{prefix}.hg").write_text(header + write_hypergraph(H), encoding="utf-8")
        Path(f"{prefix}.layout").write_text(layout, encoding="utf-8")
        if witness:
            Path(f"{prefix}.decomp").write_text(witness, encoding="utf-8")
    else:
        sys.stdout.write(header + write_hypergraph(H))
        if witness:
            sys.stderr.write(witness)
    print(f"vertices {H.n} edges {H.m} satisfiable {str(sat).lower()}", file=sys.stderr)
    return EXIT_OK


def cmd_gen_gadget(args) -> int:
    _emit(write_hypergraph(gadget_h0(_names(args.m1), _names(args.m2))), args.out)
    return EXIT_OK


def cmd_pad(args) -> int:
    from .hardness import pad_width

    _emit(write_hypergraph(pad_width(read_hypergraph(args.file), args.l, args.q)), args.out)
    return EXIT_OK


def cmd_approx(args) -> int:
    H = read_hypergraph(args.hypergraph)
    F = read_decomposition(args.decomposition).tree.retag("FHD")
    G = fhd_to_ghd_bagwise(H, F) if args.method == "bagwise" else fhd_to_ghd_degree(H, F)
    print(f"fhd width {format_fraction(width(F))} ghd width {format_fraction(width(G))}", file=sys.stderr)
    _emit(write_decomposition(G), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    rep = bound_report(read_hypergraph(args.file), parse_rational(args.k), args.vc_cap)
    if args.csv:
        print("vc,rho_star,cigap_bound,degree,degree_bound")
        print(",".join(rep.csv_row()))
    else:
        sys.stdout.write(rep.as_text())
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hgd", description="Hypergraph decompositions: properties, solvers, generators.")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for corpus work")
    p.add_argument("--budget", type=int, default=None, help="subedge budget (default HGD_BUDGET_SUBEDGES or 10^7)")
    p.add_argument("--vc-cap", type=int, default=None, help="skip VC dimension above this many vertices")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="degree, intersection widths and VC dimension of a corpus")
    a.add_argument("files", nargs="+")
    a.add_argument("--c", type=_int_list, default=[3, 4], help="c values for c-multi-intersection width")
    a.add_argument("--csv", action="store_true", help="per-instance CSV instead of the histogram table")
    a.add_argument("--figure", metavar="DIR", help="write CSV files and PNG histograms into DIR")
    a.add_argument("--count-duplicate-edges", action="store_true")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("solve", help="decide width <= k and print a decomposition")
    s.add_argument("file")
    s.add_argument("--kind", choices=["hd", "ghd", "fhd"], required=True)
    s.add_argument("-k", required=True, help="width bound, integer or p/q")
    s.add_argument("--mode", default="bip", help="GHD subedge family: bip or bmip:C")
    s.add_argument("--assume-i", type=int, default=None, help="intersection bound the caller relies on")
    s.add_argument("--c", default="auto", help="FHD fractional-part bound, integer or auto")
    s.add_argument("--rank-mode", action="store_true", help="FHD search without subedges (bounded rank)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("validate", help="check a decomposition file against a hypergraph")
    v.add_argument("hypergraph")
    v.add_argument("decomposition")
    v.add_argument("--kind", choices=["hd", "ghd", "fhd"])
    v.add_argument("-k", default=None)
    v.add_argument("--weak-special", action="store_true")
    v.set_defaults(func=cmd_validate)

    g = sub.add_parser("gen-3sat", help="reduction instance from a 3-CNF formula")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--dimacs", metavar="FILE")
    src.add_argument("--formula")
    src.add_argument("--random", metavar="N,M")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--assignment")
    g.add_argument("--emit-witness", action="store_true")
    g.add_argument("--out", metavar="PREFIX", help="write PREFIX.hg, PREFIX.layout and PREFIX.decomp")
    g.set_defaults(func=cmd_gen_3sat)

    h = sub.add_parser("gen-gadget", help="the 8-vertex gadget with attachment sets")
    h.add_argument("--m1", required=True)
    h.add_argument("--m2", required=True)
    h.add_argument("--out")
    h.set_defaults(func=cmd_gen_gadget)

    d = sub.add_parser("pad", help="add fresh vertices that shift every width")
    d.add_argument("file")
    d.add_argument("--l", type=int, required=True)
    d.add_argument("--q", type=int, default=0)
    d.add_argument("--out")
    d.set_defaults(func=cmd_pad)

    x = sub.add_parser("approx", help="turn an FHD into a GHD")
    x.add_argument("hypergraph")
    x.add_argument("decomposition")
    x.add_argument("--method", choices=["bagwise", "degree"], default="bagwise")
    x.add_argument("--out")
    x.set_defaults(func=cmd_approx)

    b = sub.add_parser("bounds", help="VC, rho* and degree based width bounds")
    b.add_argument("file")
    b.add_argument("-k", required=True)
    b.add_argument("--csv", action="store_true")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
