"""Exact rational linear programming by the two-phase simplex method.

Small dense problems only. Bland's rule rules out cycling, and every number
is a :class:`fractions.Fraction`, so feasibility verdicts are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ResourceCapError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

LP_CELL_CAP = 4 * 10**6

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple = ()
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        piv = row[j]
        if piv != 1:
            inv = 1 / piv
            for k in list(row):
                row[k] *= inv
            self.rhs[r] *= inv
        items = list(row.items())
        for s, other in enumerate(self.rows):
            if s == r:
                continue
            f = other.get(j)
            if not f:
                continue
            for k, v in items:
                nv = other.get(k, _ZERO) - f * v
                if nv:
                    other[k] = nv
                else:
                    other.pop(k, None)
            self.rhs[s] -= f * self.rhs[r]
        self.basis[r] = j

    def optimize(self, cost: dict, allowed) -> str:
        """Maximise ``cost`` over the columns in ``allowed``."""
        while True:
            reduced = dict(cost)
            for r, b in enumerate(self.basis):
                cb = cost.get(b)
                if cb:
                    for k, v in self.rows[r].items():
                        reduced[k] = reduced.get(k, _ZERO) - cb * v
            entering = None
            for j in sorted(reduced):
                if j in allowed and reduced[j] > 0 and j not in self.basis:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering)


def solve_lp(c: Sequence, A_ub: Sequence[Sequence] = (), b_ub: Sequence = (),
             A_eq: Sequence[Sequence] = (), b_eq: Sequence = (), cap: int = LP_CELL_CAP) -> LPResult:
    """Maximise ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    nvar = len(c)
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    ncol = nvar + m_ub + m
    if m * ncol > cap:
        raise ResourceCapError(f"linear program has {m} rows and {ncol} columns, above the cap", size=m * ncol, cap=cap)
    rows, rhs, basis = [], [], []
    art_start = nvar + m_ub
    for r in range(m):
        if r < m_ub:
            coeffs, b = A_ub[r], Fraction(b_ub[r])
        else:
            coeffs, b = A_eq[r - m_ub], Fraction(b_eq[r - m_ub])
        row = {j: Fraction(v) for j, v in enumerate(coeffs) if v}
        if r < m_ub:
            row[nvar + r] = _ONE
        if b < 0:
            row = {k: -v for k, v in row.items()}
            b = -b
        row[art_start + r] = _ONE
        rows.append(row)
        rhs.append(b)
        basis.append(art_start + r)
    t = _Tableau(rows, rhs, basis)
    artificial = set(range(art_start, ncol))
    phase1 = {j: -_ONE for j in artificial}
    t.optimize(phase1, set(range(ncol)))
    if any(t.rhs[r] != 0 for r, b in enumerate(t.basis) if b in artificial):
        return LPResult(INFEASIBLE)
    # drive remaining (zero-valued) artificials out of the basis; drop redundant rows
    r = 0
    while r < len(t.rows):
        if t.basis[r] in artificial:
            col = next((k for k in sorted(t.rows[r]) if k not in artificial), None)
            if col is None:
                del t.rows[r], t.rhs[r], t.basis[r]
                continue
            t.pivot(r, col)
        r += 1
    for row in t.rows:
        for k in [k for k in row if k in artificial]:
            del row[k]
    cost = {j: Fraction(v) for j, v in enumerate(c) if v}
    status = t.optimize(cost, set(range(art_start)))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [_ZERO] * nvar
    for r, b in enumerate(t.basis):
        if b < nvar:
            x[b] = t.rhs[r]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), _ZERO)
    return LPResult(OPTIMAL, tuple(x), value)
