import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tleib.scalar import (
    I,
    ONE,
    ZERO,
    DivisionByZero,
    Scalar,
    arith,
    as_scalar,
    close,
    format_scalar,
    is_zero,
    nth_root,
    parse_scalar,
)
from tests.conftest import gaussians, nonzero_gaussians


def test_add_halves():
    assert arith("add", Scalar(Fraction(1, 2)), Scalar(Fraction(1, 2))) == Scalar(1)


def test_i_squared():
    assert arith("mul", I, I) == Scalar(-1)


def test_division_by_exact_zero():
    with pytest.raises(DivisionByZero):
        arith("div", ONE, ZERO)


def test_division_by_tiny_approx():
    with pytest.raises(DivisionByZero):
        Scalar.approx(1e-320).inverse()


def test_integer_powers():
    z = Scalar(1, 1)
    assert z**2 == Scalar(0, 2)
    assert z**-1 == Scalar(Fraction(1, 2), Fraction(-1, 2))
    assert z**0 == ONE


def test_mixed_mode_goes_approx():
    s = Scalar(1) + 0.5
    assert not s.exact
    assert s.to_complex() == 1.5
    assert (ONE * 2).exact


def test_negative_zero_normalized():
    s = Scalar.approx(complex(-1.0, -0.0))
    assert math.copysign(1, s.im) == 1.0


class TestNthRoot:
    def test_perfect_power(self):
        r = nth_root(16, 4, 0)
        assert r.exact and r == 2

    def test_sqrt_minus_one(self):
        r = nth_root(-1, 2, 0)
        assert r.exact and r == I

    def test_irrational_goes_approx(self):
        r = nth_root(2, 2, 0)
        assert not r.exact
        assert r.to_complex() == pytest.approx(math.sqrt(2), rel=1e-15)

    def test_branches_rotate(self):
        roots = {nth_root(1, 4, k) for k in range(4)}
        assert roots == {ONE, I, Scalar(-1), -I}

    def test_gaussian_rational_root(self):
        # (2+3i)/5 cubed, recovered exactly on the principal branch
        z = Scalar(Fraction(2, 5), Fraction(3, 5))
        assert nth_root(z**3, 3) == z

    def test_bad_branch(self):
        with pytest.raises(ValueError):
            nth_root(4, 2, 2)

    def test_zero(self):
        assert nth_root(0, 3) == ZERO

    def test_branch_cut_noise(self):
        # -8 with rounding noise on either side of the cut gives one answer
        above = nth_root(Scalar.approx(complex(-8, 1e-16)), 3).to_complex()
        below = nth_root(Scalar.approx(complex(-8, -1e-16)), 3).to_complex()
        assert abs(above - below) < 1e-12
        assert abs(above - nth_root(-8, 3).to_complex()) < 1e-12


class TestIsZero:
    def test_exact_zero(self):
        assert is_zero(ZERO)

    def test_exact_ignores_magnitude(self):
        assert not is_zero(Scalar(Fraction(1, 10**9)), tol=1e-3)

    def test_approx_below_tol(self):
        assert is_zero(Scalar.approx(1e-15), tol=1e-12)

    def test_approx_above_tol(self):
        assert not is_zero(Scalar.approx(1e-6), tol=1e-12)


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", Scalar(3)),
        ("-3/2+1/4i", Scalar(Fraction(-3, 2), Fraction(1, 4))),
        ("i", I),
        ("-2i", Scalar(0, -2)),
        ("1/2-i", Scalar(Fraction(1, 2), -1)),
        ("0.25", Scalar(Fraction(1, 4))),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "i2", "1//2", "1/0", "2+1/0i", "abc", "1+"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_format():
    assert format_scalar(Scalar(Fraction(-3, 2), Fraction(1, 4))) == "-3/2+1/4i"
    assert format_scalar(-I) == "-i"
    assert format_scalar(Scalar(7)) == "7"


def test_as_scalar_rejects_objects():
    with pytest.raises(TypeError):
        as_scalar(object())


# -- properties ------------------------------------------------------------


def _rand(rng):
    def part():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 50))

    return Scalar(part(), part())


def test_field_axioms_10k():
    rng = random.Random(1)
    for _ in range(10_000):
        a, b, c = _rand(rng), _rand(rng), _rand(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == ONE


@given(gaussians, gaussians)
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(gaussians)
def test_format_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


@given(nonzero_gaussians, st.integers(1, 6))
def test_nth_root_of_power_exact(z, n):
    # z**n has the Gaussian-rational root z on some branch, found exactly
    a = z**n
    roots = [nth_root(a, n, k) for k in range(n)]
    assert z in [r for r in roots if r.exact]
    assert all(r**n == a for r in roots if r.exact)


@given(nonzero_gaussians, st.integers(1, 6))
def test_nth_root_all_branches(a, n):
    roots = [nth_root(a, n, k) for k in range(n)]
    for r in roots:
        if r.exact:
            assert r**n == a
        else:
            assert close(r**n, a, 1e-12)
    # the n branches are distinct
    zs = [r.to_complex() for r in roots]
    assert all(abs(zs[i] - zs[j]) > 1e-9 * abs(zs[0]) for i in range(n) for j in range(i))


@given(nonzero_gaussians)
def test_principal_square_root(a):
    r = nth_root(a, 2).to_complex()
    phase = math.atan2(r.imag, r.real)
    assert -math.pi / 2 < phase <= math.pi / 2 + 1e-12


def test_coercion_commutes_with_arithmetic():
    rng = random.Random(2)

    def draw():
        mag = 10 ** rng.uniform(-3, 3)
        ang = rng.uniform(-math.pi, math.pi)
        return Scalar(Fraction(mag * math.cos(ang)), Fraction(mag * math.sin(ang)))

    for _ in range(2000):
        a, b = draw(), draw()
        for op in ("add", "sub", "mul", "div"):
            exact_then = arith(op, a, b).to_complex()
            approx_then = arith(op, a.to_approx(), b.to_approx()).to_complex()
            scale = max(abs(a), abs(b), abs(exact_then)) if op in ("add", "sub") else abs(exact_then)
            assert abs(exact_then - approx_then) <= 1e-12 * scale
