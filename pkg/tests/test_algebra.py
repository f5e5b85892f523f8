"""Unit tests for the exact polynomial arithmetic layer."""

import random
from fractions import Fraction

import pytest

from matpoly import BadConstantTerm, BadParams, NonIntegral, NotDivisible
from matpoly.algebra import (
    BiPoly,
    IntPoly,
    PolySeries,
    eval_bipoly,
    exact_div_monomial,
    falling_factorial,
    intpoly_from_rational_coeffs,
    poly_mul,
    poly_pow,
    series_exp,
    series_log,
)

X = BiPoly({(1, 0): 1})
Y = BiPoly({(0, 1): 1})


def rand_poly(rng, max_deg=6, bound=9):
    return IntPoly(tuple(rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg + 1))))


def test_trailing_zeros_are_stripped():
    assert IntPoly((1, 2, 0, 0)) == IntPoly((1, 2))
    assert IntPoly((0, 0, 0)) == IntPoly(())
    assert IntPoly(()).degree == -1
    assert IntPoly((0, 0, 5)).degree == 2


def test_zero_polynomial_conventions():
    z = IntPoly.zero()
    p = IntPoly((3, 1))
    assert z + p == p
    assert z * p == z
    assert p - p == z
    assert z(7) == 0
    assert not z
    assert p


def test_addition_and_subtraction():
    p = IntPoly((1, 2, 3))
    q = IntPoly((5, -2))
    assert p + q == IntPoly((6, 0, 3))
    assert p - q == IntPoly((-4, 4, 3))
    assert (p + q) - q == p


def test_multiplication_known_product():
    # (x - 1)(x + 1) = x^2 - 1
    assert IntPoly((-1, 1)) * IntPoly((1, 1)) == IntPoly((-1, 0, 1))
    assert poly_mul(IntPoly((-1, 1)), IntPoly((1, 1))) == IntPoly((-1, 0, 1))


def test_pow_matches_repeated_multiplication():
    rng = random.Random(414001)
    for _ in range(25):
        p = rand_poly(rng, max_deg=3, bound=4)
        e = rng.randint(0, 5)
        naive = IntPoly.one()
        for _ in range(e):
            naive = naive * p
        assert p**e == naive
        assert poly_pow(p, e) == naive
    with pytest.raises(BadParams):
        poly_pow(IntPoly((1, 1)), -1)


def test_eval_horner_matches_term_sum():
    rng = random.Random(414002)
    for _ in range(40):
        p = rand_poly(rng)
        x = rng.randint(-10, 10)
        assert p(x) == sum(c * x**i for i, c in enumerate(p.coeffs))
        xf = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert p(xf) == sum(c * xf**i for i, c in enumerate(p.coeffs))


def test_distributive_laws_random():
    rng = random.Random(414003)
    for _ in range(30):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a


def test_scale_shift_monomial():
    p = IntPoly((1, 1))
    assert p.scale(3) == IntPoly((3, 3))
    assert p.shift(2) == IntPoly((0, 0, 1, 1))
    assert IntPoly.monomial(-2, 4) == IntPoly((0, 0, 0, 0, -2))
    assert IntPoly.monomial(1, 0) == IntPoly.one()
    with pytest.raises(BadParams):
        IntPoly.monomial(1, -1)


def test_str_descending_powers():
    assert str(IntPoly((2, -3, 1))) == "x^2 - 3x + 2"
    assert str(IntPoly(())) == "0"
    assert str(IntPoly((-5,))) == "-5"
    assert str(IntPoly((0, 1))) == "x"
    assert str(IntPoly((0, 0, -1))) == "-x^2"
    assert str(IntPoly((1, 2))) == "2x + 1"


def test_exact_div_monomial():
    p = IntPoly((0, 0, 4, -2))
    assert exact_div_monomial(p, 2) == IntPoly((4, -2))
    assert exact_div_monomial(IntPoly.zero(), 5) == IntPoly.zero()
    with pytest.raises(NotDivisible):
        exact_div_monomial(IntPoly((1, 2)), 1)
    with pytest.raises(NotDivisible):
        exact_div_monomial(IntPoly((0, 1)), 2)


def test_falling_factorial_values():
    assert falling_factorial(0) == IntPoly.one()
    assert falling_factorial(1) == IntPoly((0, 1))
    # x(x-1)(x-2) = x^3 - 3x^2 + 2x
    assert falling_factorial(3) == IntPoly((0, 2, -3, 1))
    for k in range(6):
        for x in range(-3, 7):
            expect = 1
            for i in range(k):
                expect *= x - i
            assert falling_factorial(k)(x) == expect


def test_bipoly_basics():
    t = (X - BiPoly.const(1)) * (Y - BiPoly.const(1))
    assert t.terms[(1, 1)] == 1
    assert t.terms[(0, 0)] == 1
    assert t.terms[(1, 0)] == -1
    # zero coefficients are never stored
    assert (t - t).terms == {}
    assert BiPoly({(2, 0): 0}).terms == {}
    assert eval_bipoly(t, 3, 5) == (3 - 1) * (5 - 1)


def test_bipoly_swap_and_translate():
    p = X * X + BiPoly.const(2) * Y
    assert p.swap_vars() == Y * Y + BiPoly.const(2) * X
    rng = random.Random(414004)
    q = p.translate(3, -2)  # q(x, y) = p(x + 3, y - 2)
    for _ in range(20):
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        assert eval_bipoly(q, a, b) == eval_bipoly(p, a + 3, b - 2)


def test_bipoly_substitute_into_single_variable():
    p = X * Y + X + BiPoly.const(1)
    px = IntPoly((1, 1))   # x -> 1 + z
    py = IntPoly((0, 2))   # y -> 2z
    got = p.substitute(px, py)
    for z in range(-4, 5):
        assert got(z) == (1 + z) * (2 * z) + (1 + z) + 1


def rand_qpoly(rng):
    return tuple(
        Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(rng.randint(0, 3))
    )


def test_series_log_exp_roundtrip():
    rng = random.Random(414005)
    order = 8
    for _ in range(10):
        coeffs = [(Fraction(1),)] + [rand_qpoly(rng) for _ in range(order)]
        g = PolySeries(order, coeffs)
        assert series_exp(series_log(g)) == g


def test_series_log_requires_unit_constant_term():
    with pytest.raises(BadConstantTerm):
        series_log(PolySeries(2, [(Fraction(2),), (Fraction(1),)]))


def test_series_exp_requires_zero_constant_term():
    with pytest.raises(BadConstantTerm):
        series_exp(PolySeries(2, [(Fraction(1),), (Fraction(1),)]))


def test_series_truncation_alignment():
    a = PolySeries(5, [(Fraction(1),), (Fraction(2),)])
    b = PolySeries(3, [(Fraction(1),)])
    assert (a * b).order == 3
    assert (a + b).order == 3


def test_intpoly_from_rational_coeffs():
    assert intpoly_from_rational_coeffs([Fraction(4, 2), Fraction(3)]) == IntPoly((2, 3))
    with pytest.raises(NonIntegral):
        intpoly_from_rational_coeffs([Fraction(1, 2)])
