"""Exact linear algebra helpers.

Determinant and adjugate are generic Laplace expansions that work for any
ring whose elements support +, -, * (CycloNum scalars as well as MPoly
entries).  Row reduction and solving are restricted to CycloNum, where
every nonzero pivot is invertible.
"""

from __future__ import annotations

from .cyclo import CycloNum
from .errors import SingularMatrix


def mat_mul(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_sub(a, b):
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def identity_matrix(n: int, conductor: int):
    one = CycloNum.one(conductor)
    zero = CycloNum.zero(conductor)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def _minor(matrix, i, j):
    return [
        [matrix[r][c] for c in range(len(matrix)) if c != j]
        for r in range(len(matrix))
        if r != i
    ]


def det(matrix):
    """Determinant by Laplace expansion along the first row."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    acc = None
    for j in range(n):
        entry = matrix[0][j]
        term = entry * det(_minor(matrix, 0, j))
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def adjugate(matrix):
    """Transpose of the cofactor matrix; matrix * adj = det * I."""
    n = len(matrix)
    if n == 1:
        # adjugate of a 1x1 matrix is (1) in the same ring
        entry = matrix[0][0]
        if isinstance(entry, CycloNum):
            return ((CycloNum.one(entry.conductor),),)
        from .poly import MPoly

        return ((MPoly.constant(1, entry.alphabet, entry.nvars, entry.conductor),),)
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            cof = det(_minor(matrix, j, i))
            if (i + j) % 2:
                cof = -cof
            row.append(cof)
        adj.append(tuple(row))
    return tuple(adj)


def mat_inverse(matrix):
    """Inverse of a CycloNum matrix via adjugate/determinant."""
    d = det(matrix)
    if not d:
        raise SingularMatrix("matrix is not invertible")
    d_inv = d.inverse()
    adj = adjugate(matrix)
    return tuple(tuple(e * d_inv for e in row) for row in adj)


def row_echelon(rows):
    """In-place forward elimination over CycloNum.

    Returns (echelon rows, pivot column indices).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def mat_rank(matrix) -> int:
    _, pivots = row_echelon(matrix)
    return len(pivots)


class InconsistentSystem(Exception):
    pass


class UnderdeterminedSystem(Exception):
    pass


def solve_unique(rows, rhs):
    """Solve rows * x = rhs over CycloNum; the solution must be unique.

    Raises InconsistentSystem or UnderdeterminedSystem otherwise.
    """
    if not rows:
        if any(rhs):
            raise InconsistentSystem
        return []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = row_echelon(aug)
    if ncols in pivots:
        raise InconsistentSystem("right-hand side is outside the column space")
    if len([p for p in pivots if p < ncols]) < ncols:
        raise UnderdeterminedSystem("linear system does not have full column rank")
    conductor = rows[0][0].conductor
    zero = CycloNum.zero(conductor)
    solution = [zero] * ncols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r][-1]
    return solution
