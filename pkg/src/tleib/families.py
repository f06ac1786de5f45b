"""Parameter tuples and multiplication tables for FLeib, SLeib and TLeib."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .algebra import AlgebraTable
from .scalar import as_scalar, uniform


class BadDimension(ValueError):
    pass


def _freeze(obj, names):
    values = uniform(getattr(obj, name) for name in names)
    for name, v in zip(names, values):
        object.__setattr__(obj, name, v)


@dataclass(frozen=True)
class FLeibParams:
    n: int
    alphas: tuple  # alpha_3 .. alpha_n
    theta: object = 0

    def __post_init__(self):
        if self.n < 3:
            raise BadDimension(f"FLeib needs n >= 3, got {self.n}")
        if len(self.alphas) != self.n - 2:
            raise BadDimension(f"expected {self.n - 2} alphas, got {len(self.alphas)}")
        vals = uniform([*self.alphas, self.theta])
        object.__setattr__(self, "alphas", tuple(vals[:-1]))
        object.__setattr__(self, "theta", vals[-1])

    @property
    def dim(self) -> int:
        return self.n + 1

    def alpha(self, k: int):
        return self.alphas[k - 3]


@dataclass(frozen=True)
class SLeibParams:
    n: int
    betas: tuple  # beta_3 .. beta_n
    gamma: object = 0

    def __post_init__(self):
        if self.n < 3:
            raise BadDimension(f"SLeib needs n >= 3, got {self.n}")
        if len(self.betas) != self.n - 2:
            raise BadDimension(f"expected {self.n - 2} betas, got {len(self.betas)}")
        vals = uniform([*self.betas, self.gamma])
        object.__setattr__(self, "betas", tuple(vals[:-1]))
        object.__setattr__(self, "gamma", vals[-1])

    @property
    def dim(self) -> int:
        return self.n + 1

    def beta(self, k: int):
        return self.betas[k - 3]


class _TLeibParams:
    dim: int

    def __post_init__(self):
        _freeze(self, self.names())

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, name) for name in self.names())

    @property
    def exact(self) -> bool:
        return all(v.exact for v in self.as_tuple())

    def __str__(self):
        return "L(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


@dataclass(frozen=True)
class TLeib5Params(_TLeibParams):
    b00: object = 0
    b01: object = 0
    b11: object = 0
    b12: object = 0

    dim = 5

    def __post_init__(self):
        _TLeibParams.__post_init__(self)


@dataclass(frozen=True)
class TLeib6Params(_TLeibParams):
    b00: object = 0
    b01: object = 0
    b11: object = 0
    b12: object = 0
    b13: object = 0
    b23: object = 0

    dim = 6

    def __post_init__(self):
        _TLeibParams.__post_init__(self)


TLEIB_PARAMS = {5: TLeib5Params, 6: TLeib6Params}


def tleib_params(dim: int, values) -> TLeib5Params | TLeib6Params:
    try:
        cls = TLEIB_PARAMS[dim]
    except KeyError:
        raise BadDimension(f"TLeib is only resolved in dims 5 and 6, not {dim}") from None
    return cls(*values)


def _add(brackets, i, j, k, c):
    c = as_scalar(c)
    if c:
        terms = brackets.setdefault((i, j), {})
        terms[k] = terms.get(k, 0) + c


def build_fleib(p: FLeibParams) -> AlgebraTable:
    n = p.n
    br: dict = {}
    _add(br, 0, 0, 2, 1)
    for i in range(1, n):
        _add(br, i, 0, i + 1, 1)
    for k in range(3, n):
        _add(br, 0, 1, k, p.alpha(k))
    _add(br, 0, 1, n, p.theta)
    for j in range(1, n - 1):
        for k in range(3, n + 2 - j):
            _add(br, j, 1, j + k - 1, p.alpha(k))
    return AlgebraTable.from_brackets(n + 1, br)


def build_sleib(p: SLeibParams) -> AlgebraTable:
    n = p.n
    br: dict = {}
    _add(br, 0, 0, 2, 1)
    for i in range(2, n):
        _add(br, i, 0, i + 1, 1)
    for k in range(3, n + 1):
        _add(br, 0, 1, k, p.beta(k))
    _add(br, 1, 1, n, p.gamma)
    for j in range(2, n - 1):
        for k in range(3, n + 2 - j):
            _add(br, j, 1, j + k - 1, p.beta(k))
    return AlgebraTable.from_brackets(n + 1, br)


def _tleib_skeleton(n: int) -> dict:
    br: dict = {}
    for i in range(1, n):
        _add(br, i, 0, i + 1, 1)
    for i in range(1, n):
        _add(br, 0, i, i + 1, -1)
    return br


def build_tleib5(p: TLeib5Params) -> AlgebraTable:
    br = _tleib_skeleton(4)
    _add(br, 0, 0, 4, p.b00)
    _add(br, 0, 1, 4, p.b01)
    _add(br, 1, 1, 4, p.b11)
    _add(br, 1, 2, 4, p.b12)
    _add(br, 2, 1, 4, -p.b12)
    return AlgebraTable.from_brackets(5, br)


def build_tleib6(p: TLeib6Params) -> AlgebraTable:
    br = _tleib_skeleton(5)
    _add(br, 0, 0, 5, p.b00)
    _add(br, 0, 1, 5, p.b01)
    _add(br, 1, 1, 5, p.b11)
    for i, j, sign in ((1, 2, 1), (2, 1, -1)):
        _add(br, i, j, 4, sign * p.b12)
        _add(br, i, j, 5, sign * p.b13)
    _add(br, 1, 3, 5, p.b12)
    _add(br, 3, 1, 5, -p.b12)
    _add(br, 1, 4, 5, -p.b23)
    _add(br, 4, 1, 5, p.b23)
    _add(br, 2, 3, 5, p.b23)
    _add(br, 3, 2, 5, -p.b23)
    return AlgebraTable.from_brackets(6, br)


def build_tleib(p) -> AlgebraTable:
    if isinstance(p, TLeib5Params):
        return build_tleib5(p)
    if isinstance(p, TLeib6Params):
        return build_tleib6(p)
    raise TypeError(f"not a TLeib parameter tuple: {p!r}")


def build(p) -> AlgebraTable:
    if isinstance(p, FLeibParams):
        return build_fleib(p)
    if isinstance(p, SLeibParams):
        return build_sleib(p)
    return build_tleib(p)
