"""Exact linear algebra over the rationals.

Small dense systems only.  Rank computations clear denominators and run an
integer fraction-free elimination with per-row gcd reduction to keep entries
small; solves stay in Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Rational = Fraction


def _integer_rows(rows: Sequence[Sequence[Fraction | int]]) -> list[list[int]]:
    out = []
    for row in rows:
        scale = 1
        for x in row:
            if isinstance(x, Fraction):
                d = x.denominator
                scale = scale * d // gcd(scale, d)
        ints = [int(x * scale) if isinstance(x, Fraction) else x * scale for x in row]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank of the matrix given as a sequence of rows."""
    m = _integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for i in range(rk, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        for i in range(rk + 1, len(m)):
            f = m[i][col]
            if not f:
                continue
            row = [p * a - f * b for a, b in zip(m[i], m[rk])]
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1:
                row = [x // g for x in row]
            m[i] = row
        rk += 1
        if rk == len(m):
            break
    return rk


def solve(rows: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]) -> list[Fraction] | None:
    """Solve A x = b exactly; returns None if inconsistent.

    Underdetermined systems get free variables set to zero, so when the
    columns of A are linearly independent the solution is the unique one.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    rk = 0
    for col in range(ncols):
        piv = None
        for i in range(rk, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        for i in range(rk + 1, len(m)):
            f = m[i][col]
            if not f:
                continue
            m[i] = [a - f / p * b for a, b in zip(m[i], m[rk])]
        pivots.append((rk, col))
        rk += 1
        if rk == len(m):
            break
    for i in range(rk, len(m)):
        if m[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for row, col in reversed(pivots):
        s = m[row][ncols]
        for c in range(col + 1, ncols):
            s -= m[row][c] * x[c]
        x[col] = s / m[row][col]
    return x


def solve_columns(columns: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]) -> list[Fraction] | None:
    """Solve for coefficients expressing rhs in the span of the given columns."""
    if not columns:
        return [] if not any(rhs) else None
    nrows = len(columns[0])
    rows = [[col[i] for col in columns] for i in range(nrows)]
    return solve(rows, rhs)


def nonsingular(rows: Sequence[Sequence[Fraction | int]]) -> bool:
    """Whether a square matrix has full rank."""
    n = len(rows)
    return all(len(r) == n for r in rows) and rank(rows) == n


def inverse(rows: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]] | None:
    """Exact inverse of a square matrix, or None when singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    m = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return [row[n:] for row in m]
