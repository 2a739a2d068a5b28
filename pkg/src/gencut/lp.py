"""Dense two-phase simplex with Bland's rule.

Small, deterministic, and self-contained: the rounding algorithm needs a
reproducible basic optimal solution more than it needs speed. Variables
carry finite box bounds; rows are either <= or == constraints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IterationLimit

TOL = 1e-7


@dataclass(frozen=True)
class LpModel:
    """minimize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  lo <= x <= hi."""

    c: tuple
    a_ub: tuple = ()
    b_ub: tuple = ()
    a_eq: tuple = ()
    b_eq: tuple = ()
    bounds: tuple = ()  # per-variable (lo, hi), finite
    names: tuple = ()

    @classmethod
    def build(cls, c, *, a_ub=(), b_ub=(), a_eq=(), b_eq=(), bounds=None, names=None):
        c = tuple(float(x) for x in c)
        nvar = len(c)
        if bounds is None:
            bounds = tuple((0.0, 1.0) for _ in range(nvar))
        else:
            bounds = tuple((float(lo), float(hi)) for lo, hi in bounds)
        if len(bounds) != nvar:
            raise ValueError("one (lo, hi) pair per variable required")
        for lo, hi in bounds:
            if not (np.isfinite(lo) and np.isfinite(hi)) or lo > hi:
                raise ValueError(f"bounds must be finite with lo <= hi, got ({lo}, {hi})")
        names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(nvar))
        a_ub = tuple(tuple(float(x) for x in row) for row in a_ub)
        a_eq = tuple(tuple(float(x) for x in row) for row in a_eq)
        for row in (*a_ub, *a_eq):
            if len(row) != nvar:
                raise ValueError("constraint row length mismatch")
        return cls(c, a_ub, tuple(float(b) for b in b_ub), a_eq, tuple(float(b) for b in b_eq), bounds, names)


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple
    objective: float | None
    names: tuple = ()

    def __getitem__(self, name: str) -> float:
        return self.x[self.names.index(name)]


def _pivot(tab: np.ndarray, basis: np.ndarray, row: int, col: int) -> None:
    tab[row] /= tab[row, col]
    for r in range(tab.shape[0]):
        if r != row and abs(tab[r, col]) > 1e-12:
            tab[r] -= tab[r, col] * tab[row]
    basis[row] = col


def _simplex_phase(tab, basis, cost, n_enter, max_iter):
    """Run Bland-rule simplex on the tableau for the given cost vector.

    The last tableau row is (reduced costs | -objective); rows above are
    the constraint rows with the rhs in the final column. Only the first
    ``n_enter`` columns may enter the basis.
    """
    m = tab.shape[0] - 1
    tab[m, :] = 0.0
    tab[m, : len(cost)] = cost
    for r in range(m):
        if cost[basis[r]] != 0.0:
            tab[m] -= cost[basis[r]] * tab[r]
    for _ in range(max_iter):
        col = -1
        for j in range(n_enter):
            if tab[m, j] < -TOL:
                col = j
                break
        if col < 0:
            return "optimal"
        row, best = -1, np.inf
        for r in range(m):
            a = tab[r, col]
            if a > TOL:
                ratio = tab[r, -1] / a
                if ratio < best - 1e-12 or (abs(ratio - best) <= 1e-12 and (row < 0 or basis[r] < basis[row])):
                    best, row = ratio, r
        if row < 0:
            return "unbounded"
        _pivot(tab, basis, row, col)
    raise IterationLimit("simplex iteration cap reached")


def solve_lp(model: LpModel, *, max_iter: int = 20000) -> LpSolution:
    """Solve the model; returns an optimal basic solution or a status tag.

    Deterministic: Bland's rule picks the lowest-index entering column
    and breaks leaving ties by lowest basis index, so reruns agree bit
    for bit. Optimal solutions satisfy every row within ``TOL``.
    """
    nvar = len(model.c)
    lo = np.array([b[0] for b in model.bounds])
    hi = np.array([b[1] for b in model.bounds])
    # shift x = lo + y, 0 <= y <= hi - lo; upper bounds become <= rows
    span = hi - lo
    rows_ub = [list(row) for row in model.a_ub]
    rhs_ub = [b - float(np.dot(row, lo)) for row, b in zip(model.a_ub, model.b_ub)]
    for i in range(nvar):
        if span[i] < np.inf:
            r = [0.0] * nvar
            r[i] = 1.0
            rows_ub.append(r)
            rhs_ub.append(span[i])
    rows_eq = [list(row) for row in model.a_eq]
    rhs_eq = [b - float(np.dot(row, lo)) for row, b in zip(model.a_eq, model.b_eq)]

    n_ub, n_eq = len(rows_ub), len(rows_eq)
    m = n_ub + n_eq
    a = np.zeros((m, nvar))
    b = np.zeros(m)
    for i, (row, rhs) in enumerate(zip(rows_ub, rhs_ub)):
        a[i, :] = row
        b[i] = rhs
    for i, (row, rhs) in enumerate(zip(rows_eq, rhs_eq)):
        a[n_ub + i, :] = row
        b[n_ub + i] = rhs

    # slacks on <= rows; sign-normalize so b >= 0, then artificials where
    # the slack cannot serve as the initial basic variable
    slack_sign = np.ones(n_ub)
    for i in range(m):
        if b[i] < 0:
            a[i] *= -1
            b[i] *= -1
            if i < n_ub:
                slack_sign[i] = -1.0
    n_slack = n_ub
    art_rows = [i for i in range(n_ub) if slack_sign[i] < 0] + list(range(n_ub, m))
    n_art = len(art_rows)
    n_total = nvar + n_slack + n_art

    tab = np.zeros((m + 1, n_total + 1))
    tab[:m, :nvar] = a
    tab[:m, -1] = b
    basis = np.zeros(m, dtype=int)
    for i in range(n_ub):
        tab[i, nvar + i] = slack_sign[i]
        basis[i] = nvar + i
    for k, i in enumerate(art_rows):
        tab[i, nvar + n_slack + k] = 1.0
        basis[i] = nvar + n_slack + k

    if n_art:
        cost1 = np.zeros(n_total)
        cost1[nvar + n_slack :] = 1.0
        status = _simplex_phase(tab, basis, cost1, n_total, max_iter)
        if status != "optimal":
            raise AssertionError("phase-1 objective must be bounded below by 0")
        if abs(tab[m, -1]) > 1e-9:
            return LpSolution("infeasible", (), None, model.names)
        # pivot artificials out of the basis where possible
        for r in range(m):
            if basis[r] >= nvar + n_slack:
                for j in range(nvar + n_slack):
                    if abs(tab[r, j]) > 1e-9:
                        _pivot(tab, basis, r, j)
                        break
        # freeze remaining (degenerate) artificial columns at zero
        tab[:, nvar + n_slack : n_total] = 0.0

    cost2 = np.zeros(n_total)
    cost2[:nvar] = model.c
    status = _simplex_phase(tab, basis, cost2, nvar + n_slack, max_iter)
    if status == "unbounded":
        return LpSolution("unbounded", (), None, model.names)

    y = np.zeros(n_total)
    for r in range(m):
        y[basis[r]] = tab[r, -1]
    x = y[:nvar] + lo
    obj = float(np.dot(model.c, x))
    _check_solution(model, x)
    return LpSolution("optimal", tuple(float(v) for v in x), obj, model.names)


def _check_solution(model: LpModel, x: np.ndarray) -> None:
    for row, b in zip(model.a_ub, model.b_ub):
        if float(np.dot(row, x)) > b + 1e-6:
            raise AssertionError("ub row violated beyond tolerance")
    for row, b in zip(model.a_eq, model.b_eq):
        if abs(float(np.dot(row, x)) - b) > 1e-6:
            raise AssertionError("eq row violated beyond tolerance")
    for (lo, hi), v in zip(model.bounds, x):
        if v < lo - 1e-6 or v > hi + 1e-6:
            raise AssertionError("bound violated beyond tolerance")
