import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qreals import (DomainError, IntPolynomial, PeriodicContinuedFraction,
                    QRationalFunction, binomial_order, q_binomial,
                    q_binomial_series, q_brace, q_factorial, q_pochhammer,
                    q_rational, q_real_series, ratfun, series_from_ratfun)

rationals = st.fractions(min_value=-30, max_value=30,
                         max_denominator=9)


def test_factorial_values():
    assert q_factorial(0) == QRationalFunction.one()
    assert q_factorial(1) == QRationalFunction.one()
    assert q_factorial(2) == ratfun(0, IntPolynomial((1, 1)), 1)
    # [3]! = (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
    assert q_factorial(3) == ratfun(0, IntPolynomial((1, 2, 2, 1)), 1)
    with pytest.raises(DomainError):
        q_factorial(-1)


def test_pochhammer_small():
    one = QRationalFunction.one()
    q = QRationalFunction.q_power(1)
    assert q_pochhammer(q, 0) == one
    assert q_pochhammer(1, 2).is_zero
    assert q_pochhammer(q, 2) == (1 - q) * (1 - q * q)
    assert q_pochhammer(q, 2, inverse_base=True) == (1 - q) * (1 - one)
    with pytest.raises(DomainError):
        q_pochhammer(q, -1)


def test_gaussian_binomial():
    # classical Gaussian coefficients for integer upper index
    assert q_binomial(4, 2) == ratfun(0, IntPolynomial((1, 1, 2, 1, 1)), 1)
    assert q_binomial(3, 1) == ratfun(0, IntPolynomial((1, 1, 1)), 1)
    assert q_binomial(5, 0) == QRationalFunction.one()
    assert q_binomial(3, 5).is_zero
    assert q_binomial(7, -2).is_zero


def test_gaussian_symmetry():
    for n in range(8):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)


def test_half_integer_value():
    # binom(5/2, 2) = (1 + 3q + 4q^2 + 4q^3 + 2q^4 + q^5) / (1+q)^3
    expected = ratfun(0, IntPolynomial((1, 3, 4, 4, 2, 1)),
                      IntPolynomial((1, 3, 3, 1)))
    assert q_binomial(Fraction(5, 2), 2) == expected


def test_third_integer_value():
    expected = ratfun(0, IntPolynomial((-1, -1, -2, -1)),
                      IntPolynomial((1, 4, 10, 16, 19, 16, 10, 4, 1)))
    assert q_binomial(Fraction(5, 3), 3) == expected


def test_factorial_quotient_for_integers():
    for n in range(2, 9):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_factorial(n) / (
                q_factorial(k) * q_factorial(n - k))


@settings(max_examples=120, deadline=None)
@given(rationals, st.integers(min_value=0, max_value=6))
def test_pascal_with_q_weight(r, k):
    lhs = q_binomial(r, k)
    rhs = (QRationalFunction.q_power(k) * q_binomial(r - 1, k)
           + q_binomial(r - 1, k - 1))
    assert lhs == rhs


@settings(max_examples=120, deadline=None)
@given(rationals, st.integers(min_value=0, max_value=6))
def test_pascal_with_brace_weight(r, k):
    lhs = q_binomial(r, k)
    rhs = (q_binomial(r - 1, k)
           + q_brace(r - k) * q_binomial(r - 1, k - 1))
    assert lhs == rhs


@settings(max_examples=150, deadline=None)
@given(rationals, st.integers(min_value=-2, max_value=8))
def test_order_formula_matches_computed_order(r, k):
    assert binomial_order(r, k) == q_binomial(r, k).order


def test_order_formula_spot_values():
    assert binomial_order(Fraction(1, 2), 1) == 1
    assert binomial_order(Fraction(5, 2), 3) == 1
    assert binomial_order(Fraction(5, 2), 4) == 0
    assert binomial_order(Fraction(-1, 2), 2) == -3
    assert binomial_order(3, 5) == math.inf
    assert binomial_order(-2, 3) == -9
    assert binomial_order(Fraction(5, 3), 3) == 0


def test_series_route_matches_exact():
    for r, k in [(Fraction(5, 2), 2), (Fraction(5, 3), 3),
                 (Fraction(-1, 2), 2), (4, 2), (2, 5)]:
        exact = series_from_ratfun(q_binomial(r, k), 20)
        got = q_binomial_series(r, k, 20)
        assert got.precision >= 20
        assert got.agrees_with(exact, 20)


def test_series_trivial_cases():
    assert q_binomial_series(Fraction(5, 2), -1, 10).is_zero
    one = q_binomial_series(Fraction(5, 2), 0, 10)
    assert one.coefficient(0) == 1 and one.order == 0


def test_series_for_quadratic_irrational():
    # binom(1+sqrt2, 2) two ways: the library route, and the literal
    # product [1+sqrt2][sqrt2]/[2] from two independent stabilizations
    silver = PeriodicContinuedFraction((2,), (2,))
    sqrt2 = PeriodicContinuedFraction((1,), (2,))
    got = q_binomial_series(silver, 2, 12)
    direct = (q_real_series(silver, 16) * q_real_series(sqrt2, 16)
              / series_from_ratfun(q_rational(2), 16))
    assert got.precision >= 12
    assert got.agrees_with(direct, 12)
