"""Exact rational simplex method.

Solves ``maximize c.x  subject to  A x <= b, x >= 0`` over the rationals with
a dictionary-form simplex, Bland's anti-cycling rule, and a Chvátal-style
auxiliary problem when the origin is infeasible.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

OPTIMAL = "optimal"
REACHED = "reached"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[List[Fraction]] = None
    pivots: int = 0


class _Dictionary:
    """x_B[i] = rhs[i] - sum_j rows[i][j] * x_N[j];  z = z0 + sum_j obj[j] * x_N[j]."""

    def __init__(self, basic, nonbasic, rows, rhs, obj, z0):
        self.basic = basic
        self.nonbasic = nonbasic
        self.rows = rows
        self.rhs = rhs
        self.obj = obj
        self.z0 = z0
        self.pivots = 0

    def pivot(self, r, e):
        rows, rhs = self.rows, self.rhs
        prow = rows[r]
        piv = prow[e]
        inv = 1 / piv
        # entering variable expressed from row r
        new_row = [a * inv for a in prow]
        new_row[e] = inv
        new_rhs = rhs[r] * inv
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[e]
            if f:
                for j, a in enumerate(new_row):
                    if a:
                        row[j] -= f * a
                row[e] = -f * inv
                rhs[i] -= f * new_rhs
        f = self.obj[e]
        if f:
            for j, a in enumerate(new_row):
                if a:
                    self.obj[j] -= f * a
            self.obj[e] = -f * inv
            self.z0 += f * new_rhs
        rows[r] = new_row
        rhs[r] = new_rhs
        self.basic[r], self.nonbasic[e] = self.nonbasic[e], self.basic[r]
        self.pivots += 1

    def choose_leaving(self, e):
        best = None
        for i, row in enumerate(self.rows):
            a = row[e]
            if a > 0:
                ratio = self.rhs[i] / a
                if (
                    best is None
                    or ratio < best[0]
                    or (ratio == best[0] and self.basic[i] < self.basic[best[1]])
                ):
                    best = (ratio, i)
        return None if best is None else best[1]

    def run(self, target=None):
        """Bland's rule until optimal (True) or unbounded (False).

        With ``target`` set, also stops (returning None) as soon as the
        objective value exceeds it.
        """
        while True:
            if target is not None and self.z0 > target:
                return None
            e = None
            for j in sorted(range(len(self.nonbasic)), key=self.nonbasic.__getitem__):
                if self.obj[j] > 0:
                    e = j
                    break
            if e is None:
                return True
            r = self.choose_leaving(e)
            if r is None:
                return False
            self.pivot(r, e)

    def solution(self, nvars):
        x = [Fraction(0)] * nvars
        for i, v in enumerate(self.basic):
            if v < nvars:
                x[v] = self.rhs[i]
        return x


def maximize(c, A, b, target=None) -> LPResult:
    """Maximize ``c.x`` subject to ``A x <= b`` and ``x >= 0`` exactly.

    If ``target`` is given, the search may stop early at a feasible vertex
    whose value exceeds it; the result then has status ``REACHED``.
    """
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]
    rows = [[Fraction(v) for v in row] for row in A]
    rhs = [Fraction(v) for v in b]
    for row in rows:
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")
    if m != len(rhs):
        raise ValueError("A and b have different numbers of rows")
    basic = list(range(n, n + m))
    nonbasic = list(range(n))
    pivots = 0

    if m and min(rhs) < 0:
        aux = n + m
        d = _Dictionary(
            basic,
            nonbasic + [aux],
            [row + [Fraction(-1)] for row in rows],
            rhs,
            [Fraction(0)] * n + [Fraction(-1)],
            Fraction(0),
        )
        e = len(d.nonbasic) - 1
        worst = min(range(m), key=lambda i: (d.rhs[i], d.basic[i]))
        d.pivot(worst, e)
        d.run()
        if d.z0 < 0:
            return LPResult(INFEASIBLE, pivots=d.pivots)
        if aux in d.basic:
            r = d.basic.index(aux)
            e = next(j for j, a in enumerate(d.rows[r]) if a != 0)
            d.pivot(r, e)
        e = d.nonbasic.index(aux)
        for row in d.rows:
            del row[e]
        del d.nonbasic[e]
        pivots = d.pivots
        basic, nonbasic, rows, rhs = d.basic, d.nonbasic, d.rows, d.rhs

    # objective in terms of the current nonbasic variables
    obj = [Fraction(0)] * len(nonbasic)
    z0 = Fraction(0)
    pos = {v: j for j, v in enumerate(nonbasic)}
    for v in range(n):
        if not c[v]:
            continue
        if v in pos:
            obj[pos[v]] += c[v]
        else:
            i = basic.index(v)
            z0 += c[v] * rhs[i]
            for j, a in enumerate(rows[i]):
                if a:
                    obj[j] -= c[v] * a
    d = _Dictionary(basic, nonbasic, rows, rhs, obj, z0)
    d.pivots = pivots
    done = d.run(target)
    if done is False:
        return LPResult(UNBOUNDED, pivots=d.pivots)
    status = OPTIMAL if done else REACHED
    return LPResult(status, d.z0, d.solution(n), d.pivots)
