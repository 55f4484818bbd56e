"""Exact rational linear programming via a two-phase simplex.

Small and deterministic: Bland's rule guarantees termination, all pivots
are `fractions.Fraction` arithmetic.  Problems here are tiny (weight
systems, chamber feasibility), so no effort is spent on sparsity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def simplex_maximize(objective: Sequence[Fraction],
                     eq_rows: Sequence[Sequence[Fraction]],
                     eq_rhs: Sequence[Fraction]):
    """Maximize objective . x  subject to  eq_rows @ x == eq_rhs, x >= 0.

    Returns (status, value, solution); value and solution are None unless
    status is "optimal".
    """
    n = len(objective)
    m = len(eq_rows)
    c = [Fraction(v) for v in objective]
    rows = []
    rhs = []
    for row, b in zip(eq_rows, eq_rhs):
        if len(row) != n:
            raise ValueError("ragged constraint matrix")
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    # Phase 1: artificial variable per row, minimize their sum.
    width = n + m
    tab = [rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
           + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    _solve(tab, basis, cost1, width)
    if _objective_value(tab, basis, cost1) != 0:
        return INFEASIBLE, None, None

    # Drive artificial variables out of the basis where possible.
    for i in range(m):
        if basis[i] >= n:
            pivot_col = next((j for j in range(n) if tab[i][j] != 0), None)
            if pivot_col is not None:
                _pivot(tab, basis, i, pivot_col, width)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2 on the original columns only.
    tab = [row[:n] + [row[-1]] for row in tab]
    status = _solve(tab, basis, c, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, value, x


def _objective_value(tab, basis, cost):
    return sum(cost[b] * tab[i][-1] for i, b in enumerate(basis))


def _solve(tab, basis, cost, width):
    # Maintain the reduced-cost row incrementally (one elimination per pivot)
    # instead of recomputing z_j - c_j column by column.
    zero = Fraction(0)
    red = list(cost) + [zero]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb:
            row = tab[i]
            red = [r - cb * a for r, a in zip(red, row)]
    while True:
        enter = next((j for j in range(width) if red[j] > 0), None)
        if enter is None:
            return OPTIMAL
        ratio = None
        leave = None
        for i in range(len(tab)):
            a = tab[i][enter]
            if a > 0:
                r = tab[i][-1] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tab, basis, leave, enter, width)
        factor = red[enter]
        if factor:
            pivot_row = tab[leave]
            red = [r - factor * a for r, a in zip(red, pivot_row)]


def _pivot(tab, basis, row, col, width):
    piv = tab[row][col]
    if piv != 1:
        tab[row] = [v / piv for v in tab[row]]
    pivot_row = tab[row]
    for i in range(len(tab)):
        if i != row and tab[i][col]:
            factor = tab[i][col]
            tab[i] = [a - factor * b if b else a for a, b in zip(tab[i], pivot_row)]
    basis[row] = col


def feasible_strict(rows: Sequence[Sequence[Fraction]],
                    kinds: Sequence[str],
                    rhs: Sequence[Fraction],
                    nvars: int,
                    free_vars: bool = True):
    """Decide strict feasibility of { A x (==|>=) b } with an epsilon trick.

    Every ">=" row is tightened to A x >= b + t and the margin t <= 1 is
    maximized; the system admits a solution with every inequality strict
    iff the optimum is positive.  With free_vars each x is unrestricted in
    sign (modelled as a difference of non-negative parts).
    """
    per_var = 2 if free_vars else 1
    width = nvars * per_var + 1 + len(rows)  # x parts, t, slack per ">=" row
    t_col = nvars * per_var
    eq_rows = []
    eq_rhs = []
    slack_base = t_col + 1
    n_slacks = 0
    for idx, (row, kind, b) in enumerate(zip(rows, kinds, rhs)):
        out = [Fraction(0)] * width
        for j, a in enumerate(row):
            out[per_var * j] = Fraction(a)
            if free_vars:
                out[per_var * j + 1] = -Fraction(a)
        if kind == ">=":
            out[t_col] = Fraction(-1)
            out[slack_base + n_slacks] = Fraction(-1)
            n_slacks += 1
        elif kind != "==":
            raise ValueError(f"unknown row kind {kind!r}")
        eq_rows.append(out)
        eq_rhs.append(Fraction(b))
    # t <= 1
    bound = [Fraction(0)] * width
    bound[t_col] = Fraction(1)
    eq_rows.append(bound + [Fraction(1)])
    eq_rhs.append(Fraction(1))
    eq_rows = [r + [Fraction(0)] if len(r) == width else r for r in eq_rows]
    width += 1
    objective = [Fraction(0)] * width
    objective[t_col] = Fraction(1)
    status, value, _ = simplex_maximize(objective, eq_rows, eq_rhs)
    return status == OPTIMAL and value > 0
