"""Exact rational linear programming.

A plain two-phase tableau simplex over :class:`~fractions.Fraction` with
Bland's rule, which cannot cycle. Problems here are desk-sized (a handful
of atoms, a few dozen constraints), so a dense tableau is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import MalformedProgram

_RELATIONS = {">=": ">=", "<=": "<=", "==": "==", "=": "=="}


@dataclass(frozen=True)
class LinearProgram:
    """``minimize objective · x`` subject to ``rows[i] · x  rel_i  rhs[i]``.

    Variables are non-negative unless flagged in *free*.
    """

    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    relations: tuple[str, ...]
    rhs: tuple[Fraction, ...]
    free: tuple[bool, ...]

    def __init__(self, objective, rows=(), relations=(), rhs=(), free=None):
        try:
            objective = tuple(Fraction(c) for c in objective)
            rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
            rhs = tuple(Fraction(b) for b in rhs)
        except (TypeError, ValueError) as exc:
            raise MalformedProgram(str(exc)) from exc
        n = len(objective)
        if any(len(r) != n for r in rows):
            raise MalformedProgram("every constraint row needs one coefficient per variable")
        if len(relations) != len(rows) or len(rhs) != len(rows):
            raise MalformedProgram("rows, relations and rhs must have equal length")
        try:
            relations = tuple(_RELATIONS[r] for r in relations)
        except KeyError as exc:
            raise MalformedProgram(f"unknown relation {exc.args[0]!r}") from None
        free = tuple(bool(f) for f in free) if free is not None else (False,) * n
        if len(free) != n:
            raise MalformedProgram("free flags need one entry per variable")
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "free", free)

    @property
    def n_vars(self) -> int:
        return len(self.objective)

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.n_vars:
            return False
        if any(v < 0 for v, fr in zip(x, self.free) if not fr):
            return False
        for row, rel, b in zip(self.rows, self.relations, self.rhs):
            lhs = sum((a * v for a, v in zip(row, x)), Fraction(0))
            if rel == ">=" and not lhs >= b:
                return False
            if rel == "<=" and not lhs <= b:
                return False
            if rel == "==" and lhs != b:
                return False
        return True


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    optimum: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    prow = T[r]
    p = prow[c]
    if p != 1:
        T[r] = prow = [v / p for v in prow]
    for i, row in enumerate(T):
        if i != r:
            f = row[c]
            if f:
                T[i] = [a - f * b for a, b in zip(row, prow)]
    basis[r] = c


def _simplex(T, basis, cost, allowed) -> str:
    """Minimise ``cost · x`` over the tableau in place (Bland's rule)."""
    width = len(cost)
    while True:
        # reduced costs
        red = list(cost)
        for i, b in enumerate(basis):
            cb = cost[b]
            if cb:
                row = T[i]
                for j in range(width):
                    if row[j]:
                        red[j] -= cb * row[j]
        entering = next((j for j in range(width) if allowed[j] and red[j] < 0), None)
        if entering is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], entering)


def lp_minimize(lp: LinearProgram) -> LpOutcome:
    """Solve *lp* exactly. The returned witness is re-checked by substitution."""
    # expand free variables into a difference of two non-negative ones
    cols: list[tuple[int, int]] = []  # (original index, sign)
    for j, fr in enumerate(lp.free):
        cols.append((j, 1))
        if fr:
            cols.append((j, -1))
    n = len(cols)

    rows, rels, rhs = [], [], []
    for row, rel, b in zip(lp.rows, lp.relations, lp.rhs):
        std = [row[j] * s for j, s in cols]
        if b < 0:
            std = [-v for v in std]
            b = -b
            rel = {">=": "<=", "<=": ">=", "==": "=="}[rel]
        rows.append(std)
        rels.append(rel)
        rhs.append(b)
    m = len(rows)

    n_slack = sum(1 for r in rels if r != "==")
    n_art = sum(1 for r in rels if r != "<=")
    width = n + n_slack + n_art
    T: list[list[Fraction]] = []
    basis: list[int] = []
    s_at, a_at = n, n + n_slack
    artificial = set()
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (n_slack + n_art) + [rhs[i]]
        if rels[i] == "<=":
            row[s_at] = Fraction(1)
            basis.append(s_at)
            s_at += 1
        else:
            if rels[i] == ">=":
                row[s_at] = Fraction(-1)
                s_at += 1
            row[a_at] = Fraction(1)
            basis.append(a_at)
            artificial.add(a_at)
            a_at += 1
        T.append(row)

    allowed = [True] * width
    if artificial:
        cost1 = [Fraction(1) if j in artificial else Fraction(0) for j in range(width)]
        _simplex(T, basis, cost1, allowed)
        if sum((T[i][-1] for i, b in enumerate(basis) if b in artificial), Fraction(0)) > 0:
            return LpOutcome("infeasible")
        # drive remaining (zero-valued) artificials out of the basis
        i = 0
        while i < len(T):
            if basis[i] in artificial:
                j = next((j for j in range(width) if j not in artificial and T[i][j] != 0), None)
                if j is None:
                    del T[i]
                    del basis[i]
                    continue
                _pivot(T, basis, i, j)
            i += 1
        for j in artificial:
            allowed[j] = False

    cost2 = [Fraction(0)] * width
    for k, (j, s) in enumerate(cols):
        cost2[k] = lp.objective[j] * s
    status = _simplex(T, basis, cost2, allowed)
    if status == "unbounded":
        return LpOutcome("unbounded")

    z = [Fraction(0)] * width
    for i, b in enumerate(basis):
        z[b] = T[i][-1]
    x = [Fraction(0)] * lp.n_vars
    for k, (j, s) in enumerate(cols):
        x[j] += s * z[k]
    x = tuple(x)
    if not lp.is_feasible_point(x):  # pragma: no cover - would be a solver bug
        raise AssertionError("simplex produced an infeasible witness")
    opt = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return LpOutcome("optimal", opt, x)


def open_halfplane_pair_witness(a, b) -> tuple[Fraction, Fraction] | None:
    """A point ``x`` with ``a·x < 0`` and ``b·x < 0``, or ``None`` if there is none.

    Closed form: no such point iff ``a = 0``, ``b = 0`` or ``b = -s·a`` with
    ``s > 0``. Otherwise, for independent normals solve ``a·x = b·x = -1``;
    for parallel normals pointing the same way take ``x = -a``.
    """
    a0, a1 = (Fraction(v) for v in a)
    b0, b1 = (Fraction(v) for v in b)
    if (a0 == 0 and a1 == 0) or (b0 == 0 and b1 == 0):
        return None
    det = a0 * b1 - a1 * b0
    if det == 0:
        # parallel: b = s·a; s > 0 iff a·b > 0
        if a0 * b0 + a1 * b1 < 0:
            return None
        x = (-a0, -a1)
    else:
        # Cramer's rule for a·x = -1, b·x = -1
        x = ((-b1 + a1) / det, (-a0 + b0) / det)
    assert a0 * x[0] + a1 * x[1] < 0 and b0 * x[0] + b1 * x[1] < 0
    return x


def open_halfplane_pair_feasible(a, b) -> bool:
    """Is there ``x`` in R² with ``a·x < 0`` and ``b·x < 0``?"""
    return open_halfplane_pair_witness(a, b) is not None
