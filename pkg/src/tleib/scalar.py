"""Complex scalars in two modes.

Exact scalars are Gaussian rationals stored as ``(a + b*i) / d`` with
integers ``a, b`` and a positive integer ``d`` in lowest terms.  Approx
scalars wrap a Python ``complex``.  Any operation that touches an Approx
operand produces an Approx result; Exact never comes back.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational

import mpmath

DEFAULT_TOL = 1e-12
RESIDUAL_TOL = 1e-9
UNDERFLOW_GUARD = 1e-300


class DivisionByZero(ZeroDivisionError):
    pass


def _normalize(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d < 0:
        a, b, d = -a, -b, -d
    g = math.gcd(math.gcd(a, b), d)
    if g > 1:
        return a // g, b // g, d // g
    return a, b, d


class Scalar:
    """An immutable complex number, exact (Gaussian rational) or approximate."""

    __slots__ = ("_a", "_b", "_d", "_z")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._a, self._b, self._d = _normalize(
            re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d
        )
        self._z = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> Scalar:
        s = object.__new__(cls)
        s._a, s._b, s._d = _normalize(a, b, d)
        s._z = None
        return s

    @classmethod
    def approx(cls, z) -> Scalar:
        s = object.__new__(cls)
        s._a = s._b = s._d = None
        # adding 0.0 turns -0.0 into 0.0 so the principal branch stays in (-pi, pi]
        z = complex(z)
        s._z = complex(z.real + 0.0, z.imag + 0.0)
        return s

    # -- accessors -------------------------------------------------------

    @property
    def exact(self) -> bool:
        return self._z is None

    @property
    def re(self):
        if self._z is None:
            return Fraction(self._a, self._d)
        return self._z.real

    @property
    def im(self):
        if self._z is None:
            return Fraction(self._b, self._d)
        return self._z.imag

    def to_complex(self) -> complex:
        if self._z is None:
            return complex(self._a / self._d, self._b / self._d)
        return self._z

    def to_approx(self) -> Scalar:
        return self if self._z is not None else Scalar.approx(self.to_complex())

    def conjugate(self) -> Scalar:
        if self._z is None:
            return Scalar._raw(self._a, -self._b, self._d)
        return Scalar.approx(self._z.conjugate())

    def norm_inf(self):
        """max(|re|, |im|); a Fraction for exact scalars."""
        if self._z is None:
            return Fraction(max(abs(self._a), abs(self._b)), self._d)
        return max(abs(self._z.real), abs(self._z.imag))

    def __abs__(self) -> float:
        return abs(self.to_complex())

    def __bool__(self) -> bool:
        if self._z is None:
            return self._a != 0 or self._b != 0
        return self._z != 0

    def is_zero(self, tol: float = DEFAULT_TOL, scale: float = 1.0) -> bool:
        return is_zero(self, tol, scale)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._z is None and other._z is None:
            if self._d == other._d:
                return Scalar._raw(self._a + other._a, self._b + other._b, self._d)
            return Scalar._raw(
                self._a * other._d + other._a * self._d,
                self._b * other._d + other._b * self._d,
                self._d * other._d,
            )
        return Scalar.approx(self.to_complex() + other.to_complex())

    __radd__ = __add__

    def __neg__(self):
        if self._z is None:
            return Scalar._raw(-self._a, -self._b, self._d)
        return Scalar.approx(-self._z)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._z is None and other._z is None:
            a1, b1, a2, b2 = self._a, self._b, other._a, other._b
            return Scalar._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * other._d)
        return Scalar.approx(self.to_complex() * other.to_complex())

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self._z is None:
            n2 = self._a * self._a + self._b * self._b
            if n2 == 0:
                raise DivisionByZero("division by exact zero")
            return Scalar._raw(self._d * self._a, -self._d * self._b, n2)
        if abs(self._z) <= UNDERFLOW_GUARD:
            raise DivisionByZero(f"division by near-zero {self._z!r}")
        return Scalar.approx(1 / self._z)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = ONE if self._z is None else Scalar.approx(1)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._z is None and other._z is None:
            return (self._a, self._b, self._d) == (other._a, other._b, other._d)
        return self.to_complex() == other.to_complex()

    def __hash__(self):
        if self._z is None:
            if self._b == 0:
                return hash(Fraction(self._a, self._d))
            return hash((self._a, self._b, self._d))
        return hash(self._z)

    def __repr__(self):
        if self._z is None:
            return f"Scalar({format_scalar(self)!r})"
        return f"Scalar.approx({self._z!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar._raw(0, 0, 1)
ONE = Scalar._raw(1, 0, 1)
I = Scalar._raw(0, 1, 1)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        f = Fraction(x)
        return Scalar._raw(f.numerator, 0, f.denominator)
    if isinstance(x, (float, complex)):
        return Scalar.approx(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, floats, complex numbers and scalar text."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot make a Scalar from {type(x).__name__}")
    return s


def arith(op: str, a, b=None) -> Scalar:
    a = as_scalar(a)
    if op == "neg":
        return -a
    if op == "pow_int":
        return a ** int(b)
    b = as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def is_zero(a, tol: float = DEFAULT_TOL, scale: float = 1.0) -> bool:
    """Exact: true zero.  Approx: |a| <= tol * max(1, scale)."""
    a = as_scalar(a)
    if a.exact:
        return not a
    return abs(a.to_complex()) <= tol * max(1.0, scale)


def close(a, b, tol: float = RESIDUAL_TOL) -> bool:
    """Equality for exact pairs, relative closeness otherwise."""
    a, b = as_scalar(a), as_scalar(b)
    if a.exact and b.exact:
        return a == b
    za, zb = a.to_complex(), b.to_complex()
    return abs(za - zb) <= tol * max(1.0, abs(za), abs(zb))


def uniform(values):
    """Coerce a sequence of scalars to one mode (Approx wins)."""
    values = [as_scalar(v) for v in values]
    if all(v.exact for v in values):
        return values
    return [v.to_approx() for v in values]


# -- roots ---------------------------------------------------------------


def nth_root(a, n: int, branch: int = 0) -> Scalar:
    """The ``branch``-th n-th root: principal root rotated by branch*2*pi/n.

    The principal root has argument arg(a)/n with arg(a) in (-pi, pi].  For
    an exact input the result stays exact whenever that root is itself a
    Gaussian rational.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= branch < n:
        raise ValueError(f"branch must lie in 0..{n - 1}")
    a = as_scalar(a)
    if not a:
        return a
    if not a.exact:
        z = a.to_complex()
        phase = cmath.phase(z)
        # rounding noise must not push a negative real across the branch cut
        if z.real < 0 and abs(z.imag) <= DEFAULT_TOL * abs(z):
            phase = math.pi
        r = abs(z) ** (1.0 / n)
        return Scalar.approx(cmath.rect(r, (phase + 2 * math.pi * branch) / n))

    # root(x + yi)/d == root((x + yi) * d**(n-1)) / d, a Gaussian-integer root
    lift = a._d ** (n - 1)
    wx, wy = a._a * lift, a._b * lift
    bits = max(wx.bit_length(), wy.bit_length(), 1) // n + 64
    with mpmath.workprec(bits):
        root = mpmath.root(mpmath.mpc(wx, wy), n, branch)
        cx, cy = int(mpmath.nint(root.real)), int(mpmath.nint(root.imag))
        approx = complex(root) / a._d
    if Scalar._raw(cx, cy, 1) ** n == Scalar._raw(wx, wy, 1):
        return Scalar._raw(cx, cy, a._d)
    return Scalar.approx(approx)


# -- text syntax ---------------------------------------------------------

_NUM = r"(?:\d+/\d+|\d+\.\d*|\.\d+|\d+)"
_IMAG_ONLY = re.compile(rf"^(?P<sign>[+-]?)(?P<mag>{_NUM})?i$")
_FULL = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<sign>[+-])(?P<mag>{_NUM})?i)?$")


def _frac(sign: str, mag: str | None) -> Fraction:
    f = Fraction(mag) if mag else Fraction(1)
    return -f if sign == "-" else f


def parse_scalar(text: str) -> Scalar:
    """Parse ``a/b``, ``a/b+c/di``, ``-3/2+1/4i``, ``2``, ``i`` and friends."""
    s = text.replace(" ", "")
    m = _IMAG_ONLY.match(s)
    if m:
        try:
            return Scalar(0, _frac(m["sign"], m["mag"]))
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
    m = _FULL.match(s)
    if m is None:
        raise ValueError(f"malformed scalar {text!r}")
    try:
        re_part = Fraction(m["re"])
        im_part = _frac(m["sign"], m["mag"]) if m["sign"] else Fraction(0)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return Scalar(re_part, im_part)


def _fstr(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(a: Scalar) -> str:
    if not a.exact:
        z = a.to_complex()
        return f"[{z.real!r}, {z.imag!r}]"
    re_part, im_part = a.re, a.im
    if im_part == 0:
        return _fstr(re_part)
    mag = "" if abs(im_part) == 1 else _fstr(abs(im_part))
    if re_part == 0:
        return ("-" if im_part < 0 else "") + mag + "i"
    return _fstr(re_part) + ("-" if im_part < 0 else "+") + mag + "i"
