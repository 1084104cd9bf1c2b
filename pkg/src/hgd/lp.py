"""Exact two-phase simplex over Fractions with Bland's anti-cycling rule.

Only what the covering programs need: minimise ``c.x`` subject to rows
``a.x >= b`` or ``a.x <= b`` with ``b >= 0`` and ``x >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: list[Fraction] | None = None
    # reduced costs of the slack columns of <= rows, in row order
    slack_costs: list[Fraction] | None = None


def _pivot(T: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != ONE:
        row[:] = [v / p for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, row)]


def _run(T, obj, basis, allowed: int) -> str:
    """Minimise; ``obj`` holds reduced costs with ``-z`` in the last slot."""
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        r = best[1]
        _pivot(T, obj, r, enter)
        basis[r] = enter


def minimize(
    c: Sequence,
    ge_rows: Sequence[tuple[Sequence, object]] = (),
    le_rows: Sequence[tuple[Sequence, object]] = (),
) -> LPResult:
    """Solve ``min c.x`` s.t. ``ge_rows`` (a, b): a.x >= b, ``le_rows``: a.x <= b, x >= 0."""
    n = len(c)
    n_ge, n_le = len(ge_rows), len(le_rows)
    # columns: x (n) | surplus (n_ge) | slack (n_le) | artificial (n_ge) | rhs
    width = n + n_ge + n_le + n_ge + 1
    T: list[list[Fraction]] = []
    basis: list[int] = []
    for k, (a, b) in enumerate(ge_rows):
        b = Fraction(b)
        if b < 0:
            raise ValueError("right-hand sides must be non-negative")
        row = [Fraction(v) for v in a] + [ZERO] * (width - n)
        row[n + k] = -ONE
        row[n + n_ge + n_le + k] = ONE
        row[-1] = b
        T.append(row)
        basis.append(n + n_ge + n_le + k)
    for k, (a, b) in enumerate(le_rows):
        b = Fraction(b)
        if b < 0:
            raise ValueError("right-hand sides must be non-negative")
        row = [Fraction(v) for v in a] + [ZERO] * (width - n)
        row[n + n_ge + k] = ONE
        row[-1] = b
        T.append(row)
        basis.append(n + n_ge + k)

    real = n + n_ge + n_le
    if n_ge:
        obj = [ZERO] * width
        for j in range(real, real + n_ge):
            obj[j] = ONE
        # phase one objective: sum of artificials, priced out of the basis
        for k in range(n_ge):
            obj[:] = [a - b for a, b in zip(obj, T[k])]
        _run(T, obj, basis, real)
        if -obj[-1] != 0:
            return LPResult("infeasible")
        # drive remaining artificials out of the basis
        for i, bv in enumerate(basis):
            if bv >= real:
                col = next((j for j in range(real) if T[i][j] != 0), None)
                if col is not None:
                    _pivot(T, obj, i, col)
                    basis[i] = col
    obj = [Fraction(v) for v in c] + [ZERO] * (width - n)
    for i, bv in enumerate(basis):
        f = obj[bv]
        if f:
            obj[:] = [a - f * b for a, b in zip(obj, T[i])]
    status = _run(T, obj, basis, real)
    if status != "optimal":
        return LPResult(status)
    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = T[i][-1]
    return LPResult(
        "optimal",
        value=-obj[-1],
        x=x,
        slack_costs=obj[n + n_ge: n + n_ge + n_le],
    )
