"""Gaussian elimination over Scalars.

Exact rows pivot on the first nonzero entry.  Rows containing Approx
entries use column pivoting (largest magnitude) and treat anything below
``tol * max|entry|`` as zero.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar, as_scalar

PIVOT_TOL = 1e-10


class SingularMatrix(ArithmeticError):
    pass


def _prepare(rows):
    rows = [[as_scalar(x) for x in row] for row in rows]
    exact = all(x.exact for row in rows for x in row)
    if not exact:
        rows = [[x.to_approx() for x in row] for row in rows]
    return rows, exact


def _threshold(rows, exact, tol):
    if exact:
        return None
    biggest = max((abs(x) for row in rows for x in row), default=0.0)
    return tol * biggest


def _pick_pivot(rows, start, col, exact, cutoff):
    if exact:
        for r in range(start, len(rows)):
            if rows[r][col]:
                return r
        return None
    best, best_mag = None, cutoff
    for r in range(start, len(rows)):
        mag = abs(rows[r][col])
        if mag > best_mag:
            best, best_mag = r, mag
    return best


def row_reduce(rows, tol: float = PIVOT_TOL):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows, exact = _prepare(rows)
    if not rows:
        return [], []
    ncols = len(rows[0])
    cutoff = _threshold(rows, exact, tol)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = _pick_pivot(rows, r, c, exact, cutoff)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r:
                f = rows[k][c]
                if f:
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(rows, tol: float = PIVOT_TOL) -> int:
    return len(row_reduce(rows, tol)[1])


def inverse(matrix, tol: float = PIVOT_TOL):
    """Gauss-Jordan inverse of a square matrix; raises SingularMatrix."""
    n = len(matrix)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(matrix)]
    aug, exact = _prepare(aug)
    cutoff = _threshold([row[:n] for row in aug], exact, tol)
    for c in range(n):
        p = _pick_pivot(aug, c, c, exact, cutoff)
        if p is None:
            raise SingularMatrix(f"no pivot in column {c}")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for k in range(n):
            if k != c:
                f = aug[k][c]
                if f:
                    aug[k] = [x - f * y for x, y in zip(aug[k], aug[c])]
    return [row[n:] for row in aug]


def det(matrix, tol: float = PIVOT_TOL) -> Scalar:
    rows, exact = _prepare(matrix)
    n = len(rows)
    cutoff = _threshold(rows, exact, tol)
    result = ONE if exact else ONE.to_approx()
    for c in range(n):
        p = _pick_pivot(rows, c, c, exact, cutoff)
        if p is None:
            return ZERO if exact else ZERO.to_approx()
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        inv = piv.inverse()
        for k in range(c + 1, n):
            f = rows[k][c]
            if f:
                f = f * inv
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[c])]
    return result


def vecmat(v, matrix):
    """Row vector times matrix."""
    out = [ZERO] * len(matrix[0])
    for vi, row in zip(v, matrix):
        if vi:
            out = [o + vi * m for o, m in zip(out, row)]
    return out


def matmul(a, b):
    return [vecmat(row, b) for row in a]
