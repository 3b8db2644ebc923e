"""Exact LP feasibility front end.

Every question is reduced to ``{y >= 0 : A y = b}`` with integer data and
handed to the Phase I kernel. Rows are rescaled by positive factors, which
never changes a feasibility answer.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernels


def _scale(row: Sequence, rhs=0) -> tuple[list[int], int]:
    den = Fraction(rhs).denominator
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row], int(Fraction(rhs) * den)


def standard_feasible(a: Sequence[Sequence], b: Sequence) -> bool:
    """Is ``{y >= 0 : a y = b}`` non-empty? ``a`` may be rational."""
    if not a:
        return True
    if not len(a[0]):
        return all(x == 0 for x in b)
    rows, rhs = [], []
    for r, v in zip(a, b):
        ir, iv = _scale(r, v)
        rows.append(ir)
        rhs.append(iv)
    return kernels.phase1_feasible(rows, rhs)


def feasible(nvars: int, eq=(), le=()) -> bool:
    """Is there a free ``x`` with ``r.x = c`` for ``(r, c)`` in eq and ``r.x <= c`` in le?

    Free variables are split as ``x = x+ - x-`` and each inequality gets a
    slack column.
    """
    eq, le = list(eq), list(le)
    ncols = 2 * nvars + len(le)
    a, b = [], []
    for r, c in eq:
        a.append(list(r) + [-x for x in r] + [0] * len(le))
        b.append(c)
    for k, (r, c) in enumerate(le):
        slack = [0] * len(le)
        slack[k] = 1
        a.append(list(r) + [-x for x in r] + slack)
        b.append(c)
    if not a:
        return True
    if ncols == 0:
        return all(Fraction(c) == 0 for c in b)
    return standard_feasible(a, b)


def strictly_feasible(rows: Sequence[Sequence], ncols: int) -> bool:
    """Is there ``x`` with ``r.x < 0`` for every row?

    By Gordan's alternative this fails exactly when some convex combination
    of the rows vanishes, which is a single standard-form system.
    """
    if not rows:
        return True
    a = [[r[c] for r in rows] for c in range(ncols)]
    a.append([1] * len(rows))
    return not standard_feasible(a, [0] * ncols + [1])


def in_cone(rows: Sequence[Sequence], ncols: int, g: Sequence) -> bool:
    """Is ``g`` a non-negative combination of ``rows``?

    Equivalently (Farkas) the inequality ``g.x <= 0`` is implied by
    ``r.x <= 0`` for all rows.
    """
    if not rows:
        return all(x == 0 for x in g)
    a = [[r[c] for r in rows] for c in range(ncols)]
    return standard_feasible(a, list(g))
