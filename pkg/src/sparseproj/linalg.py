"""Exact dense linear algebra over a field given by duck-typed elements.

Entries need +, -, *, / and truthiness; Rat and RatFun both qualify.  Small
dense systems only -- the package never builds large matrices.
"""

from __future__ import annotations


class InconsistentSystem(ArithmeticError):
    pass


def gauss_echelon(rows):
    """Row echelon form in place; returns list of (row_index, col) pivots."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        pval = rows[row][col]
        inv_row = [x / pval for x in rows[row]]
        rows[row] = inv_row
        for i in range(len(rows)):
            if i != row and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], inv_row)]
        pivots.append((row, col))
        row += 1
        if row == len(rows):
            break
    return pivots


def matrix_rank(rows) -> int:
    work = [list(r) for r in rows]
    return len(gauss_echelon(work))


def solve_consistent(rows, rhs):
    """Solve A x = b for rectangular consistent A; raises when inconsistent.

    Free variables (if the solution space is positive-dimensional) are set
    to zero, so the result is deterministic.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    work = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = gauss_echelon(work)
    for row, col in pivots:
        if col == ncols:
            raise InconsistentSystem("inconsistent linear system")
    sol = [0] * ncols
    for row, col in pivots:
        sol[col] = work[row][ncols]
    return sol


def nullspace(rows, ncols):
    """Basis of the right nullspace (reduced echelon parametrization)."""
    work = [list(r) for r in rows]
    pivots = gauss_echelon(work)
    pivot_cols = {col: row for row, col in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for col, row in pivot_cols.items():
            vec[col] = -work[row][fc]
        basis.append(vec)
    return basis
