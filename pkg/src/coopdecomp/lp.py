"""Exact linear programming.

Two-phase primal simplex on the standard form obtained by splitting free
variables and adding surplus and artificial columns.  The tableau is kept
in integers with fraction-free (Bareiss) pivoting: every entry is an
integer over the common denominator ``det`` of the current basis, so the
arithmetic never leaves Python ``int``.  Bland's rule gives termination.

Problems have the form  ``min/max c.x  s.t.  a.x >= b (ineq),  a.x = b (eq)``
with ``x`` free.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import DimensionMismatch

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`lp_solve`.

    ``optimal``: ``value``, ``point`` and dual multipliers ``duals_ineq``
    (nonnegative) / ``duals_eq`` with ``c = sum y_k a_k`` (for ``min``).
    ``infeasible``: ``duals_ineq``/``duals_eq`` form a Farkas certificate,
    ``sum y_k a_k = 0`` and ``sum y_k b_k > 0``.
    ``unbounded``: ``point`` is feasible and ``ray`` is an improving
    recession direction.
    """

    status: str
    value: Optional[Fraction] = None
    point: Optional[tuple] = None
    ray: Optional[tuple] = None
    duals_ineq: tuple = field(default=())
    duals_eq: tuple = field(default=())

    @property
    def optimal(self):
        return self.status == OPTIMAL

    @property
    def feasible(self):
        return self.status != INFEASIBLE


def _scaled(row, rhs):
    den = lcm(*(Fraction(x).denominator for x in row), Fraction(rhs).denominator)
    return [int(Fraction(x) * den) for x in row], int(Fraction(rhs) * den), den


class _Tableau:
    """Integer tableau ``T / det``; rows 0..m-1 are constraints, row m is the cost row."""

    def __init__(self, rows, rhs):
        self.m = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        self.T = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.det = 1
        self.basis = []

    def pivot(self, r, c):
        T = self.T
        prow = T[r]
        p = prow[c]
        det = self.det
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[c]
            if f == 0:
                if p != det:
                    T[i] = [(x * p) // det for x in row]
                continue
            T[i] = [(x * p - f * y) // det for x, y in zip(row, prow)]
        self.det = p
        if p < 0:
            # keep det > 0 so entry signs equal value signs
            for i, row in enumerate(T):
                T[i] = [-x for x in row]
            self.det = -p
        if r < len(self.basis):
            self.basis[r] = c

    def set_cost(self, cost):
        """Install the cost row ``det * c - sum_i c_B(i) * T_i`` for a rational cost vector ``cost``."""
        det = self.det
        row = [det * x for x in cost] + [0]
        for i in range(self.m):
            cb = cost[self.basis[i]]
            if cb:
                row = [a - cb * b for a, b in zip(row, self.T[i])]
        if len(self.T) > self.m:
            self.T[self.m] = row
        else:
            self.T.append(row)

    def run(self, allowed):
        """Minimize with Bland's rule; returns ``None`` at optimality or the unbounded column."""
        T, m = self.T, self.m
        while True:
            cost = T[m]
            enter = next((j for j in allowed if cost[j] < 0), None)
            if enter is None:
                return None
            best = None
            for i in range(m):
                a = T[i][enter]
                if a > 0:
                    b = T[i][-1]
                    if best is None:
                        best = (i, b, a)
                        continue
                    _, bb, ba = best
                    lhs, rhs = b * ba, bb * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best[0]]):
                        best = (i, b, a)
            if best is None:
                return enter
            self.pivot(best[0], enter)


def lp_solve(objective, poly, sense="min"):
    """Solve ``min`` or ``max`` of ``objective . x`` over an :class:`HPolytope`-like object.

    ``poly`` needs ``dim``, ``inequalities`` and ``equalities`` (lists of
    ``(normal, rhs)``).
    """
    d = poly.dim
    if len(objective) != d:
        raise DimensionMismatch(f"objective has {len(objective)} entries, polytope dim {d}")
    return solve_system(objective, list(poly.inequalities), list(poly.equalities), sense, d)


def solve_system(objective, inequalities, equalities, sense="min", dim=None):
    if sense not in ("min", "max"):
        raise ValueError("sense must be 'min' or 'max'")
    if dim is None:
        dim = len(objective)
    for a, _ in list(inequalities) + list(equalities):
        if len(a) != dim:
            raise DimensionMismatch(f"constraint of length {len(a)} in dimension {dim}")
    c = [Fraction(x) for x in objective]
    if sense == "max":
        c = [-x for x in c]

    rows = [(a, b, True) for a, b in inequalities] + [(a, b, False) for a, b in equalities]
    m = len(rows)
    k = sum(1 for r in rows if r[2])
    # columns: x+ (dim), x- (dim), surplus (k), artificial (m)
    nstruct = 2 * dim + k
    ncols = nstruct + m
    int_rows, int_rhs, signs, scales = [], [], [], []
    s = 0
    for i, (a, b, is_ineq) in enumerate(rows):
        ia, ib, den = _scaled(a, b)
        sign = -1 if ib < 0 else 1
        row = [0] * ncols
        for j, x in enumerate(ia):
            row[j] = sign * x
            row[dim + j] = -sign * x
        if is_ineq:
            row[2 * dim + s] = -sign
            s += 1
        row[nstruct + i] = 1
        int_rows.append(row)
        int_rhs.append(sign * ib)
        signs.append(sign)
        scales.append(den)

    if m == 0:
        if any(c):
            ray = tuple(-x for x in c)
            return LPResult(UNBOUNDED, point=tuple(Fraction(0) for _ in c), ray=ray)
        return LPResult(OPTIMAL, value=Fraction(0), point=tuple(Fraction(0) for _ in c))

    tab = _Tableau(int_rows, int_rhs)
    tab.basis = list(range(nstruct, ncols))
    structural = range(nstruct)

    # phase I: minimize the sum of artificials
    tab.set_cost([0] * nstruct + [1] * m)
    tab.run(structural)
    det = tab.det
    if tab.T[m][-1] != 0:
        # cost row rhs holds -det * w*; duals y_i = 1 - d_art_i
        y = [Fraction(det - tab.T[m][nstruct + i], det) for i in range(m)]
        yi, ye = _unscale(y, signs, scales, rows)
        return LPResult(INFEASIBLE, duals_ineq=yi, duals_eq=ye)

    # drive zero-level artificials out of the basis where possible
    for r in range(m):
        if tab.basis[r] >= nstruct:
            j = next((j for j in structural if tab.T[r][j] != 0), None)
            if j is not None:
                tab.pivot(r, j)

    den = lcm(*(x.denominator for x in c)) if c else 1
    icost = [0] * ncols
    for j, x in enumerate(c):
        icost[j] = int(x * den)
        icost[dim + j] = -int(x * den)
    tab.set_cost(icost)
    unbounded_col = tab.run(structural)
    det = tab.det
    values = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        values[b] = Fraction(tab.T[i][-1], det)
    point = tuple(values[j] - values[dim + j] for j in range(dim))

    if unbounded_col is not None:
        dirs = [Fraction(0)] * ncols
        dirs[unbounded_col] = Fraction(1)
        for i, b in enumerate(tab.basis):
            dirs[b] = Fraction(-tab.T[i][unbounded_col], det)
        ray = tuple(dirs[j] - dirs[dim + j] for j in range(dim))
        return LPResult(UNBOUNDED, point=point, ray=ray)

    value = sum((ci * xi for ci, xi in zip(c, point)), Fraction(0))
    # phase II duals (of the scaled, sign-flipped rows): y_i = -d_art_i / den
    y = [Fraction(-tab.T[m][nstruct + i], det * den) for i in range(m)]
    yi, ye = _unscale(y, signs, scales, rows)
    if sense == "max":
        value = -value
        yi = tuple(-v for v in yi)
        ye = tuple(-v for v in ye)
    return LPResult(OPTIMAL, value=value, point=point, duals_ineq=yi, duals_eq=ye)


def _unscale(y, signs, scales, rows):
    """Map duals of the integer rows back to the caller's original rows."""
    yi, ye = [], []
    for yk, sign, den, (_, _, is_ineq) in zip(y, signs, scales, rows):
        v = yk * sign * den
        (yi if is_ineq else ye).append(v)
    return tuple(yi), tuple(ye)
