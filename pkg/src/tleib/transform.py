"""Adapted base changes acting on TLeib parameter tuples.

Two routes compute the action.  ``transform_params_oracle`` builds the new
basis inside the algebra, re-expresses every product in it by exact
elimination and reads the parameters back off the table.  The
``transform_params_closed*`` functions evaluate the closed-form parameter
maps directly.  They must agree bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import AlgebraTable, product
from .families import TLeib5Params, TLeib6Params, build_tleib
from .scalar import RESIDUAL_TOL, ZERO, Scalar, as_scalar, close, is_zero, uniform


class SingularTransform(ArithmeticError):
    pass


class TemplateMismatch(AssertionError):
    """The transformed table left the TLeib family.  Always a bug."""


@dataclass(frozen=True)
class AdaptedTransform:
    """f(e_0) = sum A_i e_i, f(e_1) = sum_{i>=1} B_i e_i.

    ``B`` holds B_1..B_n; B_0 is zero for every adapted map.
    """

    A: tuple
    B: tuple

    def __post_init__(self):
        if len(self.B) != len(self.A) - 1:
            raise ValueError(f"need {len(self.A) - 1} B coefficients, got {len(self.B)}")
        vals = uniform([*self.A, *self.B])
        object.__setattr__(self, "A", tuple(vals[: len(self.A)]))
        object.__setattr__(self, "B", tuple(vals[len(self.A) :]))

    @property
    def dim(self) -> int:
        return len(self.A)

    @property
    def exact(self) -> bool:
        return all(x.exact for x in (*self.A, *self.B))

    @classmethod
    def identity(cls, dim: int) -> AdaptedTransform:
        return cls.from_generators(dim, A0=1, B1=1)

    @classmethod
    def from_generators(cls, dim: int, A0=1, A1=0, B1=1, B2=0, B3=0) -> AdaptedTransform:
        A = [A0, A1] + [0] * (dim - 2)
        B = [B1, B2, B3][: dim - 1] + [0] * max(0, dim - 4)
        return cls(tuple(A), tuple(B))

    def coefficient(self, name: str):
        kind, idx = name[0], int(name[1:])
        return self.A[idx] if kind == "A" else self.B[idx - 1]


def _b_of(p) -> Scalar:
    return p.b23 if isinstance(p, TLeib6Params) else ZERO


def nonsingularity(t: AdaptedTransform, p) -> Scalar:
    """A_0 * B_1 * (A_0 + A_1 * b), with b = b23 in dim 6 and 0 in dim 5."""
    return t.A[0] * t.B[0] * (t.A[0] + t.A[1] * _b_of(p))


def applicable(t: AdaptedTransform, p, tol: float = RESIDUAL_TOL) -> bool:
    if t.dim != p.dim:
        return False
    return not is_zero(nonsingularity(t, p), tol)


def extend_basis(t: AdaptedTransform, table: AlgebraTable, tol: float = linalg.PIVOT_TOL) -> list:
    """Rows f(e_0)..f(e_n) in old coordinates; f(e_i) = [f(e_{i-1}), f(e_0)]."""
    n = table.dim
    if t.dim != n:
        raise ValueError(f"transform of dim {t.dim} on a table of dim {n}")
    rows = [tuple(t.A), (ZERO, *t.B)]
    for _ in range(2, n):
        rows.append(product(table, rows[-1], rows[0]))
    # det() already applies a pivot threshold relative to the largest entry
    if not linalg.det(rows, tol):
        raise SingularTransform("adapted basis is degenerate")
    return rows


def transformed_table(t: AdaptedTransform, table: AlgebraTable, tol: float = linalg.PIVOT_TOL):
    """Structure constants of ``table`` in the basis f(e_0)..f(e_n)."""
    rows = extend_basis(t, table, tol)
    try:
        inv = linalg.inverse(rows, tol)
    except linalg.SingularMatrix as exc:
        raise SingularTransform(str(exc)) from None
    n = table.dim
    consts = [[linalg.vecmat(product(table, rows[x], rows[y]), inv) for y in range(n)] for x in range(n)]
    return AlgebraTable(n, consts), rows


def _read_params(table: AlgebraTable):
    c = table.constants
    if table.dim == 5:
        return TLeib5Params(c[0][0][4], c[0][1][4], c[1][1][4], c[1][2][4])
    if table.dim == 6:
        return TLeib6Params(c[0][0][5], c[0][1][5], c[1][1][5], c[1][2][4], c[1][2][5], -c[1][4][5])
    raise ValueError(f"no TLeib template in dim {table.dim}")


def _matches(table: AlgebraTable, template: AlgebraTable, tol: float) -> bool:
    if table.exact and template.exact:
        return table.constants == template.constants
    scale = max([1.0] + [abs(c) for *_, c in template.entries()])
    for row_a, row_b in zip(table.constants, template.constants):
        for va, vb in zip(row_a, row_b):
            for a, b in zip(va, vb):
                if abs(a.to_complex() - b.to_complex()) > tol * scale:
                    return False
    return True


def transform_params_oracle(p, t: AdaptedTransform, tol: float = RESIDUAL_TOL):
    """New parameters after the base change ``t``, recomputed from the table."""
    if not applicable(t, p, tol):
        raise SingularTransform("A0*B1*(A0 + A1*b) vanishes")
    new_table, _ = transformed_table(t, build_tleib(p))
    q = _read_params(new_table)
    if not _matches(new_table, build_tleib(q), tol):
        raise TemplateMismatch(f"transformed table of {p} is not a TLeib table")
    return q


def transform_params_closed5(p: TLeib5Params, A0, A1, B1) -> TLeib5Params:
    A0, A1, B1 = (as_scalar(x) for x in (A0, A1, B1))
    if not (A0 * B1):
        raise SingularTransform("A0*B1 vanishes")
    b00, b01, b11, b12 = p.as_tuple()
    A03 = A0**3
    return TLeib5Params(
        (A0 * A0 * b00 + A0 * A1 * b01 + A1 * A1 * b11) / (A03 * B1),
        (A0 * b01 + 2 * A1 * b11) / A03,
        B1 * b11 / A03,
        B1 * b12 / (A0 * A0),
    )


def transform_params_closed6(p: TLeib6Params, A0, A1, B1, B2, B3) -> TLeib6Params:
    A0, A1, B1, B2, B3 = (as_scalar(x) for x in (A0, A1, B1, B2, B3))
    b00, b01, b11, b12, b13, b23 = p.as_tuple()
    D = A0 + A1 * b23
    if not (A0 * B1 * D):
        raise SingularTransform("A0*B1*(A0 + A1*b23) vanishes")
    A02, A03 = A0 * A0, A0**3
    b13_num = (
        2 * A0 * A1 * B1 * B1 * b12 * b12
        + A02 * B1 * B1 * b13
        + (A02 * (B2 * B2 - 2 * B1 * B3) + A1 * A1 * B1 * B1 * b12 * b12) * b23
    )
    return TLeib6Params(
        (A02 * b00 + A0 * A1 * b01 + A1 * A1 * b11) / (A03 * B1 * D),
        (A0 * b01 + 2 * A1 * b11) / (A03 * D),
        B1 * b11 / (A03 * D),
        B1 * b12 / A02,
        b13_num / (A0**4 * B1 * D),
        B1 * b23 / D,
    )


def transform_params_closed(p, t: AdaptedTransform):
    if isinstance(p, TLeib5Params):
        return transform_params_closed5(p, t.A[0], t.A[1], t.B[0])
    return transform_params_closed6(p, t.A[0], t.A[1], t.B[0], t.B[1], t.B[2])


def random_gaussian_rational(rng: random.Random, bound: int = 9) -> Scalar:
    def part():
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return Scalar(part(), part())


def random_adapted(dim: int, p, seed, max_tries: int = 1000) -> AdaptedTransform:
    """Uniform small Gaussian-rational coefficients, resampled until applicable.

    ``seed`` is an int or a ``random.Random`` to draw from.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_tries):
        A = tuple(random_gaussian_rational(rng) for _ in range(dim))
        B = tuple(random_gaussian_rational(rng) for _ in range(dim - 1))
        t = AdaptedTransform(A, B)
        if nonsingularity(t, p):
            return t
    raise RuntimeError(f"no applicable transform after {max_tries} draws")


def compose(t1: AdaptedTransform, t2: AdaptedTransform, p) -> AdaptedTransform:
    """The single transform equal to applying ``t1`` to ``p`` and then ``t2``."""
    table = build_tleib(p)
    m1 = extend_basis(t1, table)
    q = transform_params_oracle(p, t1)
    m2 = extend_basis(t2, build_tleib(q))
    # rows of m2 are in f1-coordinates; m2 @ m1 expresses them in the original basis
    row0 = linalg.vecmat(m2[0], m1)
    row1 = linalg.vecmat(m2[1], m1)
    if not is_zero(row1[0]):
        raise TemplateMismatch("composition is not adapted")
    return AdaptedTransform(tuple(row0), tuple(row1[1:]))


def inverse(t: AdaptedTransform, p) -> AdaptedTransform:
    """Transform taking ``transform_params_oracle(p, t)`` back to ``p``."""
    rows = extend_basis(t, build_tleib(p))
    inv = linalg.inverse(rows)
    if not is_zero(inv[1][0]):
        raise TemplateMismatch("inverse is not adapted")
    return AdaptedTransform(tuple(inv[0]), tuple(inv[1][1:]))


def params_close(p, q, tol: float = RESIDUAL_TOL) -> bool:
    return type(p) is type(q) and all(close(a, b, tol) for a, b in zip(p.as_tuple(), q.as_tuple()))


def residual(p, q) -> float:
    return max(abs(a.to_complex() - b.to_complex()) for a, b in zip(p.as_tuple(), q.as_tuple()))

