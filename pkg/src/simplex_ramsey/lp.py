"""Exact Phase-I simplex for ``A x = b, x >= 0``.

Revised simplex over the rationals with Bland's smallest-index rule, so it
terminates on degenerate problems and returns an exact basic feasible
point.  Columns are given sparsely as ``[(row, coeff), ...]``; the
decomposition LPs built elsewhere have 0/1 columns with only a few nonzeros,
and the explicit basis inverse is m x m, which stays small.

Arithmetic runs on ``gmpy2.mpq``; results are handed back as Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

Column = Sequence[tuple[int, object]]

_ZERO = mpq(0)
_ONE = mpq(1)


class PhaseOneStats:
    __slots__ = ("pivots", "rows", "cols")

    def __init__(self, rows: int = 0, cols: int = 0):
        self.rows = rows
        self.cols = cols
        self.pivots = 0

    def __repr__(self):
        return f"PhaseOneStats(rows={self.rows}, cols={self.cols}, pivots={self.pivots})"


def phase_one(columns: Sequence[Column], b: Sequence[object], stats: PhaseOneStats | None = None
              ) -> list[Fraction] | None:
    """Find an exact ``x >= 0`` with ``A x = b`` or prove none exists.

    Parameters
    ----------
    columns
        Column ``j`` of ``A`` as a list of ``(row, coefficient)`` pairs.
    b
        Right-hand side, one entry per row.
    stats
        Optional counter object; receives the problem size and pivot count.

    Returns
    -------
    list of Fraction or None
        A basic feasible solution, or ``None`` when the system is infeasible.
    """
    m = len(b)
    nv = len(columns)
    if stats is None:
        stats = PhaseOneStats()
    stats.rows, stats.cols, stats.pivots = m, nv, 0

    # flip rows so that b >= 0 and the artificial basis is feasible
    sign = [(-1 if mpq(bi) < 0 else 1) for bi in b]
    rhs = [abs(mpq(bi)) for bi in b]
    cols = []
    for col in columns:
        entries = [(r, mpq(a) * sign[r]) for r, a in col if a != 0]
        cols.append(entries)

    # basis[k] is the variable in row k; artificial for row k has index nv + k
    basis = [nv + k for k in range(m)]
    in_basis = set(basis)
    binv = [[_ONE if i == j else _ZERO for j in range(m)] for i in range(m)]
    xb = list(rhs)

    while True:
        # dual prices y = c_B^T B^-1 with cost 1 on artificials; artificials
        # sitting at zero may be left in the basis, so stop once none is positive
        art_rows = [k for k in range(m) if basis[k] >= nv]
        if all(xb[k] == 0 for k in art_rows):
            break
        y = [_ZERO] * m
        for k in art_rows:
            row = binv[k]
            for r in range(m):
                if row[r]:
                    y[r] += row[r]

        entering = -1
        for j in range(nv):
            if j in in_basis:
                continue
            # reduced cost of a structural column is -y . A_j
            red = _ZERO
            for r, a in cols[j]:
                red -= y[r] * a
            if red < 0:
                entering = j
                break
        if entering < 0:
            break

        col = cols[entering]
        d = [_ZERO] * m
        for k in range(m):
            row = binv[k]
            acc = _ZERO
            for r, a in col:
                v = row[r]
                if v:
                    acc += v * a
            d[k] = acc

        leave = -1
        best = None
        for k in range(m):
            if d[k] > 0:
                ratio = xb[k] / d[k]
                if (best is None or ratio < best
                        or (ratio == best and basis[k] < basis[leave])):
                    best = ratio
                    leave = k
        if leave < 0:
            raise ArithmeticError("phase-one objective unbounded; cannot happen")

        piv = d[leave]
        prow = [v / piv for v in binv[leave]]
        binv[leave] = prow
        xb[leave] = xb[leave] / piv
        for k in range(m):
            if k != leave and d[k]:
                f = d[k]
                row = binv[k]
                for r in range(m):
                    if prow[r]:
                        row[r] -= f * prow[r]
                xb[k] -= f * xb[leave]
        in_basis.discard(basis[leave])
        basis[leave] = entering
        in_basis.add(entering)
        stats.pivots += 1

    if any(basis[k] >= nv and xb[k] != 0 for k in range(m)):
        return None
    x = [Fraction(0)] * nv
    for k in range(m):
        if basis[k] < nv:
            v = xb[k]
            x[basis[k]] = Fraction(int(v.numerator), int(v.denominator))
    return x
