"""Turning FHDs into GHDs, and the width bounds that go with it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .covers import degree_round, optimal_fractional_cover, optimal_integral_cover
from .decomposition import DecompositionError, DecompositionTree, validate
from .properties import degree, vc_dimension


def _require_valid(H, F: DecompositionTree) -> None:
    problems = validate(H, F)
    if problems:
        raise DecompositionError(f"input decomposition is invalid: {problems[0]}")


def fhd_to_ghd_bagwise(H, F: DecompositionTree) -> DecompositionTree:
    """Re-cover every bag with a minimum integral edge cover."""
    _require_valid(H, F)
    return DecompositionTree(
        "GHD", [nd.with_cover(optimal_integral_cover(H, H.vset(nd.bag))[0]) for nd in F.nodes]
    )


def fhd_to_ghd_degree(H, F: DecompositionTree) -> DecompositionTree:
    """Round every cover through :func:`degree_round`; width grows by at most degree(H)."""
    _require_valid(H, F)
    return DecompositionTree("GHD", [nd.with_cover(degree_round(H, nd.cover)) for nd in F.nodes])


@dataclass
class BoundReport:
    vc: int | None
    rho_star: Fraction
    cigap_bound: float | None
    degree: int
    degree_bound: Fraction

    def as_text(self) -> str:
        def show(x):
            if x is None:
                return "unavailable"
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            return f"{x:.6g}" if isinstance(x, float) else str(x)

        fields = [
            ("vc", self.vc),
            ("rho_star", self.rho_star),
            ("cigap_bound", self.cigap_bound),
            ("degree", self.degree),
            ("degree_bound", self.degree_bound),
        ]
        return "".join(f"{k}: {show(v)}\n" for k, v in fields)

    def csv_row(self) -> list[str]:
        return [line.split(": ", 1)[1] for line in self.as_text().splitlines()]


def bound_report(H, k, vc_cap: int | None = None) -> BoundReport:
    k = Fraction(k)
    vc = vc_dimension(H, vc_cap)
    rs = optimal_fractional_cover(H, H.all_vertices)[1] if H.n else Fraction(0)
    cig = None
    if vc is not None and rs > 0:
        # natural log; advisory only, never used in a decision
        cig = 2.0 ** (vc + 2) * math.log(11 * float(rs)) / float(rs)
    d = degree(H)
    return BoundReport(vc, rs, cig, d, d * k)
