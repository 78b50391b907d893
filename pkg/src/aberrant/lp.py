"""Small dense exact simplex over rationals.

Solves max/min c.x subject to A x <= b, x >= 0 with Fraction arithmetic.
Two-phase with Bland's rule, so it terminates on every input.  Problem sizes
here are tiny (separating-hyperplane feasibility, point-in-polyhedron tests),
so clarity beats sparsity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list[Fraction] | None = None
    value: Fraction | None = None


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for r in range(len(T)):
        if r != row and T[r][col]:
            f = T[r][col]
            T[r] = [a - f * b for a, b in zip(T[r], T[row])]
    basis[row] = col


def _simplex(T, basis, ncols):
    """Bland-rule simplex on tableau T with objective in the last row.

    Returns "optimal" or "unbounded".  Column layout: structurals+slacks
    (+artificials) then rhs; objective row holds reduced costs for a
    maximization.
    """
    m = len(T) - 1
    while True:
        col = next((j for j in range(ncols) if T[m][j] > 0), None)
        if col is None:
            return "optimal"
        best_row, best_ratio = None, None
        for r in range(m):
            if T[r][col] > 0:
                ratio = T[r][-1] / T[r][col]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[best_row])
                ):
                    best_row, best_ratio = r, ratio
        if best_row is None:
            return "unbounded"
        _pivot(T, basis, best_row, col)


def solve(c, A, b, sense: str = "max") -> LPResult:
    """Optimize c.x subject to A x <= b, x >= 0."""
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    if sense == "min":
        res = solve([-v for v in c], A, b, "max")
        if res.status == "optimal":
            res.value = -res.value
        return res
    m, n = len(A), len(c)
    if any(len(row) != n for row in A):
        raise ValueError("ragged constraint matrix")

    # rows with negative rhs are flipped and get artificial variables
    flipped = [b[i] < 0 for i in range(m)]
    nart = sum(flipped)
    width = n + m + nart + 1
    T = []
    art_col = n + m
    art_of_row = {}
    for i in range(m):
        row = [Fraction(0)] * width
        sgn = -1 if flipped[i] else 1
        for j in range(n):
            row[j] = sgn * A[i][j]
        row[n + i] = Fraction(sgn)
        if flipped[i]:
            row[art_col] = Fraction(1)
            art_of_row[i] = art_col
            art_col += 1
        row[-1] = sgn * b[i]
        T.append(row)
    basis = [art_of_row.get(i, n + i) for i in range(m)]

    if nart:
        # phase 1: maximize -sum(artificials); over the nonbasics that reads
        # +sum of the artificial rows, with the artificial columns cleared
        obj = [Fraction(0)] * width
        for i in range(m):
            if i in art_of_row:
                obj = [o + v for o, v in zip(obj, T[i])]
        for j in range(n + m, n + m + nart):
            obj[j] = Fraction(0)
        T.append(obj)
        _simplex(T, basis, n + m)  # artificials never re-enter
        if T[-1][-1] != 0:
            return LPResult("infeasible")
        for r in range(m):  # drive any degenerate artificial out of the basis
            if basis[r] >= n + m:
                col = next((j for j in range(n + m) if T[r][j] != 0), None)
                if col is not None:
                    _pivot(T, basis, r, col)
        T.pop()

    obj = [Fraction(0)] * width
    for j in range(n):
        obj[j] = c[j]
    for r in range(m):
        if basis[r] < n and obj[basis[r]]:
            f = obj[basis[r]]
            obj = [a - f * bb for a, bb in zip(obj, T[r])]
    T.append(obj)
    status = _simplex(T, basis, n + m)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = T[r][-1]
    return LPResult("optimal", x, sum(ci * xi for ci, xi in zip(c, x)))


def feasible_point(A, b):
    """A point x >= 0 with A x <= b, or None."""
    res = solve([0] * (len(A[0]) if A else 0), A, b)
    return res.x if res.status == "optimal" else None
