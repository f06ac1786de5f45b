"""Orbit classification of TLeib_5 and TLeib_6.

Every algebra is sorted into one of the subsets U5_1..U5_9 or U6_1..U6_19.
Parametric subsets carry invariants; each algebra gets a canonical tuple and
a witness transform that carries it there.

Witness recipes solve the closed-form parameter maps for A0, A1, B1 (and B3
in dim 6, with B2 = 0).  Recipes that need radicals go through
``nth_root``, which stays exact when the root is a Gaussian rational.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from .algebra import is_lie
from .families import TLeib5Params, TLeib6Params, build_tleib, tleib_params
from .scalar import DEFAULT_TOL, RESIDUAL_TOL, ZERO, Scalar, close, nth_root
from .transform import (
    AdaptedTransform,
    SingularTransform,
    compose,
    inverse,
    random_adapted,
    random_gaussian_rational,
    residual,
    transform_params_oracle,
)


class DegenerateStratum(ValueError):
    """The input sits where the representative family cannot reach."""


class UnknownLabel(ValueError):
    pass


NUM_SUBSETS = {5: 9, 6: 19}


@dataclass(frozen=True, order=True)
class OrbitLabel:
    dim: int
    index: int

    def __post_init__(self):
        if self.dim not in NUM_SUBSETS or not 1 <= self.index <= NUM_SUBSETS[self.dim]:
            raise UnknownLabel(f"no subset U{self.dim}_{self.index}")

    def __str__(self):
        return f"U{self.dim}_{self.index}"

    @property
    def notation(self) -> str:
        return f"U_{self.dim}^{self.index}"

    @classmethod
    def parse(cls, text: str) -> OrbitLabel:
        m = re.fullmatch(r"U_?(\d+)[_^](\d+)", text.strip())
        if m is None:
            raise UnknownLabel(f"malformed label {text!r}")
        return cls(int(m[1]), int(m[2]))

    @property
    def parametric(self) -> bool:
        return (self.dim, self.index) in INVARIANT_NAMES

    @property
    def invariant_names(self) -> tuple[str, ...]:
        return INVARIANT_NAMES.get((self.dim, self.index), ())


def all_labels(dim: int | None = None) -> list[OrbitLabel]:
    dims = [dim] if dim else sorted(NUM_SUBSETS)
    return [OrbitLabel(d, i) for d in dims for i in range(1, NUM_SUBSETS[d] + 1)]


INVARIANT_NAMES = {
    (5, 1): ("I1",),
    (6, 1): ("I1", "I2"),
    (6, 2): ("I1",),
    (6, 7): ("I1", "I2"),
    (6, 8): ("I1",),
    (6, 11): ("I1",),
}

# single-orbit representatives, tuples in (b00, b01, b11, b12[, b13, b23]) order
REPRESENTATIVES = {
    (5, 2): (1, 0, 1, 0),
    (5, 3): (0, 0, 1, 0),
    (5, 4): (0, 1, 0, 1),
    (5, 5): (0, 1, 0, 0),
    (5, 6): (1, 0, 0, 1),
    (5, 7): (1, 0, 0, 0),
    (5, 8): (0, 0, 0, 1),
    (5, 9): (0, 0, 0, 0),
    (6, 3): (1, 0, 0, 1, 0, 1),
    (6, 4): (0, 0, 0, 1, 0, 1),
    (6, 5): (1, 0, 0, 0, 0, 1),
    (6, 6): (0, 0, 0, 0, 0, 1),
    (6, 9): (1, 0, 0, 1, 0, 0),
    (6, 10): (0, 0, 0, 1, 0, 0),
    (6, 12): (1, 0, 1, 0, 0, 0),
    (6, 13): (0, 0, 1, 0, 0, 0),
    (6, 14): (0, 1, 0, 0, 1, 0),
    (6, 15): (0, 1, 0, 0, 0, 0),
    (6, 16): (1, 0, 0, 0, 1, 0),
    (6, 17): (1, 0, 0, 0, 0, 0),
    (6, 18): (0, 0, 0, 0, 1, 0),
    (6, 19): (0, 0, 0, 0, 0, 0),
}


def _family(key, lambdas):
    """Parametric representatives L(...) with the lambda slots filled in."""
    l1 = lambdas[0]
    l2 = lambdas[1] if len(lambdas) > 1 else None
    return {
        (5, 1): lambda: (l1, 0, 1, 1),
        (6, 1): lambda: (l1, 0, 1, l2, 0, 1),
        (6, 2): lambda: (0, 1, 0, l1, 0, 1),
        (6, 7): lambda: (l1, l2, 1, 1, 0, 0),
        (6, 8): lambda: (l1, 1, 0, 1, 0, 0),
        (6, 11): lambda: (l1, 0, 1, 0, 1, 0),
    }[key]()


def representative(label: OrbitLabel, lambdas=()):
    """The distinguished tuple of ``label``; parametric labels need lambdas."""
    key = (label.dim, label.index)
    if key in REPRESENTATIVES:
        return tleib_params(label.dim, REPRESENTATIVES[key])
    need = len(INVARIANT_NAMES[key])
    if len(lambdas) != need:
        raise ValueError(f"{label} needs {need} parameter(s)")
    return tleib_params(label.dim, _family(key, list(lambdas)))


# -- zero tests ----------------------------------------------------------


class _ZeroTest:
    """Exact zero test, or a relative one scaled by the largest parameter."""

    def __init__(self, p, tol: float):
        self.tol = tol
        self.exact = p.exact
        self.scale = max([1.0] + [abs(v) for v in p.as_tuple()])

    def __call__(self, x: Scalar, degree: int = 1) -> bool:
        if self.exact and x.exact:
            return not x
        return abs(x) <= self.tol * self.scale**degree


def delta(p) -> Scalar:
    return 4 * p.b00 * p.b11 - p.b01 * p.b01


def _k1(p) -> Scalar:
    return 2 * p.b11 - p.b01 * p.b23


def _k2(p) -> Scalar:
    return p.b01 - p.b23 * p.b00


def subset5(p: TLeib5Params, tol: float = DEFAULT_TOL) -> OrbitLabel:
    z = _ZeroTest(p, tol)
    if not z(p.b11):
        if not z(p.b12):
            i = 1
        else:
            i = 3 if z(delta(p), 2) else 2
    elif not z(p.b01):
        i = 5 if z(p.b12) else 4
    elif not z(p.b00):
        i = 7 if z(p.b12) else 6
    else:
        i = 9 if z(p.b12) else 8
    return OrbitLabel(5, i)


def subset6(p: TLeib6Params, tol: float = DEFAULT_TOL) -> OrbitLabel:
    z = _ZeroTest(p, tol)
    if not z(p.b23):
        if not z(p.b11):
            i = 1
        elif not z(p.b01):
            i = 2
        elif not z(p.b12):
            i = 4 if z(p.b00) else 3
        else:
            i = 6 if z(p.b00) else 5
    elif not z(p.b12):
        if not z(p.b11):
            i = 7
        elif not z(p.b01):
            i = 8
        else:
            i = 10 if z(p.b00) else 9
    elif not z(p.b11):
        if not z(p.b13):
            i = 11
        else:
            i = 13 if z(delta(p), 2) else 12
    elif not z(p.b01):
        i = 15 if z(p.b13) else 14
    elif not z(p.b00):
        i = 17 if z(p.b13) else 16
    else:
        i = 19 if z(p.b13) else 18
    return OrbitLabel(6, i)


def subset(p, tol: float = DEFAULT_TOL) -> OrbitLabel:
    return subset5(p, tol) if isinstance(p, TLeib5Params) else subset6(p, tol)


def degeneracy(p, label: OrbitLabel | None = None, tol: float = DEFAULT_TOL) -> str:
    """Reason text when ``p`` lies on a degenerate stratum, else ''."""
    if isinstance(p, TLeib5Params):
        return ""
    label = label or subset6(p, tol)
    z = _ZeroTest(p, tol)
    if label.index == 1 and z(_k1(p), 2):
        return "U6_1 with 2*b11 - b01*b23 = 0: outside the L(l1,0,1,l2,0,1) family"
    if label.index == 2 and z(_k2(p), 2):
        return "U6_2 with b01 - b23*b00 = 0: outside the L(0,1,0,l,0,1) family"
    return ""


def invariants5(p: TLeib5Params, tol: float = DEFAULT_TOL) -> dict:
    if subset5(p, tol).index != 1:
        return {}
    return {"I1": (p.b12 / p.b11) ** 4 * delta(p)}


def invariants6(p: TLeib6Params, tol: float = DEFAULT_TOL) -> dict:
    """Named invariants; a value is None on a degenerate stratum."""
    label = subset6(p, tol)
    b00, b01, b11, b12, b13, b23 = p.as_tuple()
    degenerate = bool(degeneracy(p, label, tol))
    if label.index == 1:
        if degenerate:
            return {"I1": None, "I2": None}
        k = _k1(p)
        return {
            "I1": (b23 / k) ** 2 * delta(p),
            "I2": k**3 * b12**3 / (b23**2 * b11**4),
        }
    if label.index == 2:
        if degenerate:
            return {"I1": None}
        return {"I1": _k2(p) ** 4 * b12**3 / (b23**3 * b01**5)}
    if label.index == 7:
        return {
            "I1": (4 * b00 * b12**4 - 2 * b13 * b01 * b12**2 + b13**2 * b11) / (b12 * b11**2),
            "I2": (b01 * b12**2 - b13 * b11) ** 2 / (b12 * b11**3),
        }
    if label.index == 8:
        return {"I1": (2 * b00 * b12**2 - b13 * b01) ** 3 / (b12**3 * b01**4)}
    if label.index == 11:
        return {"I1": (b13 / b11) ** 6 * delta(p)}
    return {}


def invariants(p, tol: float = DEFAULT_TOL) -> dict:
    return invariants5(p, tol) if isinstance(p, TLeib5Params) else invariants6(p, tol)


# -- canonical forms -----------------------------------------------------


def canonical5(p: TLeib5Params, tol: float = DEFAULT_TOL):
    """Canonical tuple of the orbit of ``p`` and a witness transform."""
    i = subset5(p, tol).index
    b00, b01, b11, b12 = p.as_tuple()
    A1 = ZERO
    if i == 1:
        # this base change lands on I1/4, not I1, in the first coordinate
        A0, A1, B1 = b11 / b12, -b01 / (2 * b12), b11**2 / b12**3
        target = (invariants5(p, tol)["I1"] / 4, 0, 1, 1)
    elif i == 2:
        A0 = nth_root(delta(p) / 4, 4)
        A1, B1 = -b01 * A0 / (2 * b11), A0**3 / b11
    elif i == 3:
        A0, A1, B1 = Scalar(1), -b01 / (2 * b11), 1 / b11
    elif i in (4, 5):
        A0 = nth_root(b01, 2)
        A1 = -A0 * b00 / b01
        B1 = b01 / b12 if i == 4 else Scalar(1)
    elif i == 6:
        A0 = nth_root(b00 * b12, 3)
        B1 = A0**2 / b12
    elif i == 7:
        A0, B1 = Scalar(1), b00
    elif i == 8:
        # B1 = A0**2 would leave b12 untouched; A0**2 / b12 normalizes it
        A0, B1 = Scalar(1), 1 / b12
    else:
        A0, B1 = Scalar(1), Scalar(1)
    if i != 1:
        target = REPRESENTATIVES[(5, i)]
    witness = AdaptedTransform.from_generators(5, A0, A1, B1)
    return TLeib5Params(*target), witness


def _b3_clearing_b13(p: TLeib6Params, A0, A1, B1):
    b12, b13, b23 = p.b12, p.b13, p.b23
    return B1 * (2 * A0 * A1 * b12**2 + A0**2 * b13 + A1**2 * b12**2 * b23) / (2 * A0**2 * b23)


def canonical6(p: TLeib6Params, tol: float = DEFAULT_TOL):
    """Canonical tuple and witness; raises DegenerateStratum."""
    label = subset6(p, tol)
    i = label.index
    reason = degeneracy(p, label, tol)
    if reason:
        raise DegenerateStratum(reason)
    z = _ZeroTest(p, tol)
    b00, b01, b11, b12, b13, b23 = p.as_tuple()
    inv = invariants6(p, tol)
    A1 = ZERO
    target = REPRESENTATIVES.get((6, i))

    if i <= 6:
        # b23 != 0: A0 and A1 fix the rest, B1 = D/b23 normalizes b23, B3 clears b13
        if i == 1:
            lam2 = nth_root(inv["I2"] / 8, 3)
            target = (inv["I1"], 0, 1, lam2, 0, 1)
            if z(b12):
                A0 = nth_root(b11 / b23, 3)
            else:
                A0 = _k1(p) * b12 / (2 * b11 * b23 * lam2)
            A1 = -A0 * b01 / (2 * b11)
        elif i == 2:
            lam = nth_root(inv["I1"], 3)
            target = (0, 1, 0, lam, 0, 1)
            if z(b12):
                A0 = nth_root(b01**2 / _k2(p), 3)
            else:
                A0 = _k2(p) * b12 / (b01 * b23 * lam)
            A1 = -A0 * b00 / b01
        elif i == 3:
            A0 = nth_root(b00 * b12**2 / b23, 5)
            A1 = (b23 * A0**2 / b12 - A0) / b23
        elif i == 4:
            A0 = Scalar(1)
            A1 = (b23 / b12 - 1) / b23
        elif i == 5:
            A0 = b00 * b23
            A1 = (1 - A0) / b23
        else:
            A0 = Scalar(1)
        B1 = (A0 + A1 * b23) / b23
        B3 = _b3_clearing_b13(p, A0, A1, B1)
    else:
        # b23 = 0, so D = A0 and b13' = B1*(2*A1*b12**2 + A0*b13)/A0**4
        B3 = ZERO
        if i == 7:
            lam2 = nth_root(inv["I2"], 2)
            target = (inv["I1"] / 4, lam2, 1, 1, 0, 0)
            x = b01 - b13 * b11 / b12**2
            A0 = nth_root(b11 / b12, 2) if z(x, 3) else x * b12 / (lam2 * b11)
        elif i == 8:
            lam = nth_root(inv["I1"] / 8, 3)
            target = (lam, 1, 0, 1, 0, 0)
            y = 2 * b00 * b12**2 - b13 * b01
            A0 = nth_root(b01, 3) if z(y, 3) else y / (2 * b12 * lam * b01)
        elif i == 9:
            A0 = nth_root(b00 * b12, 4)
        elif i == 10:
            A0 = Scalar(1)
        if i <= 10:
            A1 = -A0 * b13 / (2 * b12**2)
            B1 = A0**2 / b12
        elif i == 11:
            target = (inv["I1"] / 4, 0, 1, 0, 1, 0)
            A0 = b11 / b13
            A1, B1 = -A0 * b01 / (2 * b11), A0**3 / b13
        elif i in (12, 13):
            A0 = nth_root(delta(p) / 4, 6) if i == 12 else Scalar(1)
            A1, B1 = -A0 * b01 / (2 * b11), A0**4 / b11
        elif i in (14, 15):
            A0 = nth_root(b01, 3)
            A1 = -A0 * b00 / b01
            B1 = b01 / b13 if i == 14 else Scalar(1)
        elif i == 16:
            A0 = nth_root(b00 * b13, 5)
            B1 = A0**3 / b13
        elif i == 17:
            A0, B1 = Scalar(1), b00
        elif i == 18:
            A0, B1 = Scalar(1), 1 / b13
        else:
            A0, B1 = Scalar(1), Scalar(1)
    witness = AdaptedTransform.from_generators(6, A0, A1, B1, ZERO, B3)
    return TLeib6Params(*target), witness


def canonical(p, tol: float = DEFAULT_TOL):
    return canonical5(p, tol) if isinstance(p, TLeib5Params) else canonical6(p, tol)


# -- results -------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationResult:
    label: OrbitLabel
    invariants: dict = field(default_factory=dict)
    canonical: TLeib5Params | TLeib6Params | None = None
    witness: AdaptedTransform | None = None
    degenerate: bool = False
    reason: str = ""
    lie: bool = False

    @property
    def dim(self) -> int:
        return self.label.dim


def classify(p, tol: float = DEFAULT_TOL) -> ClassificationResult:
    label = subset(p, tol)
    invs = invariants(p, tol)
    lie = is_lie(build_tleib(p))
    try:
        canon, witness = canonical(p, tol)
    except DegenerateStratum as exc:
        return ClassificationResult(label, invs, None, None, True, str(exc), lie)
    return ClassificationResult(label, invs, canon, witness, False, "", lie)


def witness_residual(p, result: ClassificationResult) -> float:
    """Distance between the witness image of ``p`` and the canonical tuple."""
    if result.witness is None or result.canonical is None:
        raise ValueError("result carries no witness")
    image = transform_params_oracle(p, result.witness)
    return residual(image, result.canonical)


def _same_invariants(a: dict, b: dict, tol: float) -> bool:
    if a.keys() != b.keys():
        return False
    for name in a:
        x, y = a[name], b[name]
        if x is None or y is None:
            if x is not y:
                return False
        elif not close(x, y, tol):
            return False
    return True


@dataclass(frozen=True)
class Certificate:
    a: ClassificationResult
    b: ClassificationResult
    witness: AdaptedTransform | None = None
    note: str = ""


def isomorphic(pa, pb, tol: float = RESIDUAL_TOL):
    """Decide L(pa) ~ L(pb).

    Returns ``(answer, certificate)``.  ``answer`` is None when both inputs
    sit on the same degenerate stratum, where no orbit invariants are known.
    """
    if pa.dim != pb.dim:
        raise ValueError("isomorphism test needs tuples of the same dimension")
    ra, rb = classify(pa), classify(pb)
    if ra.label != rb.label:
        return False, Certificate(ra, rb, note="different subsets")
    if ra.degenerate != rb.degenerate:
        return False, Certificate(ra, rb, note="degeneracy is preserved by every adapted map")
    if ra.degenerate:
        return None, Certificate(ra, rb, note="both on a degenerate stratum; undecided")
    if not _same_invariants(ra.invariants, rb.invariants, tol):
        return False, Certificate(ra, rb, note="invariants differ")
    witness = None
    try:
        witness = compose(ra.witness, inverse(rb.witness, pb), pa)
    except (SingularTransform, ArithmeticError):
        pass
    return True, Certificate(ra, rb, witness)


# -- construction --------------------------------------------------------


def realize(label: OrbitLabel, values) -> TLeib5Params | TLeib6Params:
    """A member of ``label`` whose invariants equal ``values`` exactly."""
    key = (label.dim, label.index)
    if key not in INVARIANT_NAMES:
        if values:
            raise ValueError(f"{label} is a single orbit")
        return representative(label)
    values = [Scalar(v) if isinstance(v, int) else v for v in values]
    if len(values) != len(INVARIANT_NAMES[key]):
        raise ValueError(f"{label} has invariants {INVARIANT_NAMES[key]}")
    v1 = values[0]
    if key == (5, 1):
        return TLeib5Params(v1 / 4, 0, 1, 1)
    if key == (6, 1):
        v2 = values[1]
        if not v2:
            return TLeib6Params(v1, 0, 1, 0, 0, 1)
        t = 8 / v2
        return TLeib6Params(v1 * t, 0, t, 1, 0, 1)
    if key == (6, 2):
        if not v1:
            return TLeib6Params(0, 1, 0, 0, 0, 1)
        return TLeib6Params(0, 1 / v1, 0, 1, 0, 1)
    if key == (6, 7):
        v2 = values[1]
        if not v2:
            return TLeib6Params(v1 / 4, 0, 1, 1, 0, 0)
        u = 1 / v2
        return TLeib6Params(v1 * u * u / 4, u, u, 1, 0, 0)
    if key == (6, 8):
        if not v1:
            return TLeib6Params(0, 1, 0, 1, 0, 0)
        w = 1 / v1
        return TLeib6Params(w / 2, w, 0, 1, 0, 0)
    return TLeib6Params(v1 / 4, 0, 1, 0, 1, 0)


def sample_member(label: OrbitLabel, seed) -> TLeib5Params | TLeib6Params:
    """A random member of ``label``: its representative pushed through a random map."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    key = (label.dim, label.index)
    lambdas = [random_gaussian_rational(rng) for _ in INVARIANT_NAMES.get(key, ())]
    rep = representative(label, lambdas)
    return transform_params_oracle(rep, random_adapted(label.dim, rep, rng))
