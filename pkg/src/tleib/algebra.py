"""Structure-constant tables and the checks that run on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .scalar import ZERO, Scalar, as_scalar, uniform


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraTable:
    """``constants[i][j][k]`` is the coefficient of e_k in [e_i, e_j]."""

    dim: int
    constants: tuple
    _nonzero: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dim must be positive")
        if len(self.constants) != n or any(
            len(row) != n or any(len(vec) != n for vec in row) for row in self.constants
        ):
            raise DimensionMismatch(f"constants must have shape {n}x{n}x{n}")
        flat = uniform(x for row in self.constants for vec in row for x in vec)
        it = iter(flat)
        consts = tuple(tuple(tuple(next(it) for _ in range(n)) for _ in range(n)) for _ in range(n))
        object.__setattr__(self, "constants", consts)
        nonzero = tuple(
            (i, j, k, consts[i][j][k])
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if consts[i][j][k]
        )
        object.__setattr__(self, "_nonzero", nonzero)

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict) -> AlgebraTable:
        """Build from ``{(i, j): {k: c, ...}}``; unlisted products are zero."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in brackets.items():
            for k, v in terms.items():
                if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                    raise DimensionMismatch(f"index ({i},{j},{k}) out of range for dim {dim}")
                c[i][j][k] = c[i][j][k] + as_scalar(v)
        return cls(dim, c)

    @classmethod
    def zero(cls, dim: int) -> AlgebraTable:
        return cls.from_brackets(dim, {})

    @property
    def exact(self) -> bool:
        return all(c.exact for *_, c in self._nonzero)

    def entries(self):
        """Nonzero constants as (i, j, k, c)."""
        return self._nonzero

    def bracket(self, i: int, j: int) -> tuple:
        return self.constants[i][j]


def basis_vector(dim: int, i: int) -> tuple:
    return tuple(Scalar(1) if k == i else ZERO for k in range(dim))


def product(table: AlgebraTable, x, y) -> tuple:
    """[x, y] extended bilinearly from the table."""
    n = table.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} for dim {n}")
    out = [ZERO] * n
    for i, j, k, c in table._nonzero:
        xi = x[i]
        if not xi:
            continue
        yj = y[j]
        if not yj:
            continue
        out[k] = out[k] + xi * yj * c
    return tuple(out)


def _left(table, i, v):
    # [e_i, v]
    n = table.dim
    out = [ZERO] * n
    for j, vj in enumerate(v):
        if vj:
            for k, c in enumerate(table.constants[i][j]):
                if c:
                    out[k] = out[k] + vj * c
    return out


def _right(table, v, j):
    # [v, e_j]
    n = table.dim
    out = [ZERO] * n
    for i, vi in enumerate(v):
        if vi:
            for k, c in enumerate(table.constants[i][j]):
                if c:
                    out[k] = out[k] + vi * c
    return out


def leibniz_defect(table: AlgebraTable):
    """Largest coefficient of [x,[y,z]] - [[x,y],z] + [[x,z],y] over basis triples.

    Coefficients are measured by max(|re|, |im|), so an exact table yields
    a Fraction and zero means the table is a Leibniz algebra.
    """
    n = table.dim
    worst = Fraction(0) if table.exact else 0.0
    for i in range(n):
        for j in range(n):
            ij = table.constants[i][j]
            for k in range(n):
                lhs = _left(table, i, table.constants[j][k])
                t2 = _right(table, ij, k)
                t3 = _right(table, table.constants[i][k], j)
                for a, b, c in zip(lhs, t2, t3):
                    d = a - b + c
                    if d:
                        worst = max(worst, d.norm_inf())
    return worst


def lower_central_series(table: AlgebraTable, tol: float = linalg.PIVOT_TOL) -> list[int]:
    """Dimensions of L^1 = L, L^{k+1} = [L^k, L] until zero or stable."""
    n = table.dim
    basis = [basis_vector(n, i) for i in range(n)]
    dims = [n]
    while basis:
        spans = [_right(table, v, j) for v in basis for j in range(n)]
        basis, _ = linalg.row_reduce(spans, tol)
        if len(basis) == dims[-1]:
            break
        dims.append(len(basis))
    return dims


def is_filiform(table: AlgebraTable, tol: float = linalg.PIVOT_TOL) -> bool:
    n = table.dim
    if n < 2:
        return False
    return lower_central_series(table, tol) == [n] + list(range(n - 2, -1, -1))


def is_lie(table: AlgebraTable) -> bool:
    """Skew-symmetric table, i.e. [x, x] = 0 for every x."""
    c = table.constants
    n = table.dim
    for i in range(n):
        if any(c[i][i]):
            return False
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(c[i][j], c[j][i])):
                return False
    return True
