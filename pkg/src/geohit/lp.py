"""Exact rational linear programming: two-phase tableau simplex, Bland's rule.

Solves ``max/min c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0`` over
:class:`~fractions.Fraction`. Bland's rule guarantees termination, so there is
no iteration cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Matrix = Sequence[Sequence]


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None
    pivots: int = 0


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, c: int, obj: list[Fraction]) -> None:
        row = self.rows[r]
        p = row[c]
        if p != 1:
            row[:] = [v / p for v in row]
        nz = [j for j, v in enumerate(row) if v]
        for k, other in enumerate(self.rows):
            if k != r:
                f = other[c]
                if f:
                    for j in nz:
                        other[j] -= f * row[j]
        f = obj[c]
        if f:
            for j in nz:
                obj[j] -= f * row[j]
        self.basis[r] = c
        self.pivots += 1

    def optimize(self, obj: list[Fraction], allowed: int) -> bool:
        """Maximize with reduced-cost row ``obj``; return False when unbounded.

        Only columns ``< allowed`` may enter the basis.
        """
        while True:
            enter = next((j for j in range(allowed) if obj[j] > 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter, obj)


def _reduced_costs(tab: _Tableau, cost: Sequence[Fraction], width: int) -> list[Fraction]:
    obj = list(cost) + [Fraction(0)] * (width - len(cost))
    for i, b in enumerate(tab.basis):
        f = obj[b]
        if f:
            row = tab.rows[i]
            for j, v in enumerate(row):
                if v:
                    obj[j] -= f * v
    return obj


def linprog_exact(
    c: Sequence,
    A_ub: Optional[Matrix] = None,
    b_ub: Optional[Sequence] = None,
    A_eq: Optional[Matrix] = None,
    b_eq: Optional[Sequence] = None,
    maximize: bool = False,
) -> LPResult:
    n = len(c)
    A_ub = [list(map(Fraction, r)) for r in (A_ub or [])]
    b_ub = list(map(Fraction, b_ub or []))
    A_eq = [list(map(Fraction, r)) for r in (A_eq or [])]
    b_eq = list(map(Fraction, b_eq or []))
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")
    for r in A_ub + A_eq:
        if len(r) != n:
            raise ValueError("constraint row length differs from number of variables")
    cost = [Fraction(v) if maximize else -Fraction(v) for v in c]

    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    n_slack = m_ub
    # columns: x (n) | slacks (m_ub) | artificials (one per row needing one) | rhs
    rows: list[list[Fraction]] = []
    needs_art: list[bool] = []
    for i in range(m):
        if i < m_ub:
            coeffs, rhs = A_ub[i], b_ub[i]
            slack = [Fraction(0)] * n_slack
            slack[i] = Fraction(1)
        else:
            coeffs, rhs = A_eq[i - m_ub], b_eq[i - m_ub]
            slack = [Fraction(0)] * n_slack
        row = coeffs + slack
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [rhs])
        needs_art.append(not (i < m_ub and row[n + i] == 1))

    art_rows = [i for i in range(m) if needs_art[i]]
    n_struct = n + n_slack
    width = n_struct + len(art_rows)
    basis: list[int] = []
    for i, row in enumerate(rows):
        rhs = row.pop()
        art = [Fraction(0)] * len(art_rows)
        if needs_art[i]:
            art[art_rows.index(i)] = Fraction(1)
            basis.append(n_struct + art_rows.index(i))
        else:
            basis.append(n + i)
        row.extend(art)
        row.append(rhs)
    tab = _Tableau(rows, basis)

    if art_rows:
        phase1 = [Fraction(0)] * n_struct + [Fraction(-1)] * len(art_rows)
        obj = _reduced_costs(tab, phase1, width + 1)
        tab.optimize(obj, width)
        if obj[-1] != 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # drive zero-level artificials out of the basis; drop redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= n_struct:
                col = next((j for j in range(n_struct) if tab.rows[r][j] != 0), None)
                if col is None:
                    del tab.rows[r]
                    del tab.basis[r]
                    continue
                tab.pivot(r, col, obj)
            r += 1
        for row in tab.rows:
            del row[n_struct:width]
        width = n_struct

    obj = _reduced_costs(tab, cost, width + 1)
    if not tab.optimize(obj, width):
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    x = [Fraction(0)] * n_struct
    for i, b in enumerate(tab.basis):
        x[b] = tab.rows[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x[:n])), Fraction(0))
    return LPResult(OPTIMAL, tuple(x[:n]), value, tab.pivots)


def feasible_point(
    A_ub: Matrix, b_ub: Sequence, free: bool = True
) -> Optional[tuple[Fraction, ...]]:
    """A point with ``A_ub x <= b_ub`` or None; variables are unrestricted if ``free``."""
    n = len(A_ub[0]) if A_ub else 0
    if free:
        split = [list(r) + [-v for v in r] for r in A_ub]
        res = linprog_exact([0] * (2 * n), A_ub=split, b_ub=b_ub)
        if res.status != OPTIMAL:
            return None
        return tuple(res.x[i] - res.x[n + i] for i in range(n))
    res = linprog_exact([0] * n, A_ub=A_ub, b_ub=b_ub)
    return res.x if res.status == OPTIMAL else None
