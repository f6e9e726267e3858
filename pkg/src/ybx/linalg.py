"""Exact rank and kernel over Q, backed by sympy matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy


def _to_sympy(c):
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    return sympy.sympify(c)


def _from_sympy(c):
    c = sympy.nsimplify(c)
    if c.is_Rational:
        return Fraction(int(c.p), int(c.q))
    return c


def to_matrix(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[_to_sympy(c) for c in row] for row in rows])


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return to_matrix(rows).rank()


def nullspace(rows: Sequence[Sequence]) -> list:
    """Basis of {v : rows . v = 0} as lists of Fractions."""
    M = to_matrix(rows)
    return [[_from_sympy(c) for c in v] for v in M.nullspace()]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list | None:
    """A solution v of rows . v = rhs, or None when inconsistent."""
    M, b = to_matrix(rows), sympy.Matrix([_to_sympy(c) for c in rhs])
    try:
        sol, params = M.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [_from_sympy(c) for c in sol]
