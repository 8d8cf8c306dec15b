from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lawrence.polynomial import (
    NEG_INF,
    IntPolynomial,
    add,
    evaluate_at_rational,
    format_polynomial,
    multiply,
    shift_by_t_power,
    substitute_reciprocal,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=6)
WORKED = IntPolynomial([1, 3, 4])


def test_reciprocal_example():
    assert substitute_reciprocal(WORKED, 6) == IntPolynomial([0, 0, 0, 0, 4, 3, 1])


def test_reciprocal_rejects_short_degree():
    with pytest.raises(ValueError):
        substitute_reciprocal(WORKED, 1)


def test_evaluate_at_one():
    assert evaluate_at_rational(WORKED, 1) == 8
    assert evaluate_at_rational(WORKED, Fraction(1, 2)) == Fraction(7, 2)


def test_multiply_difference_of_squares():
    assert multiply(IntPolynomial([1, -1]), IntPolynomial([1, 1])) == IntPolynomial([1, 0, -1])


def test_zero_polynomial_degree_sentinel():
    z = IntPolynomial([0, 0])
    assert z.coeffs == ()
    assert z.degree is NEG_INF
    assert z.degree < 0 and z.degree < -(10**9)
    assert z.degree != -1
    assert str(z) == "0"


def test_display():
    assert str(WORKED) == "1 + 3t + 4t^2"
    assert format_polynomial([0, -1, 0, 2]) == "-t + 2t^3"
    assert str(IntPolynomial.t_minus_one_power(2)) == "1 - 2t + t^2"


def test_shift():
    assert shift_by_t_power(WORKED, 2) == IntPolynomial([0, 0, 1, 3, 4])
    assert shift_by_t_power(IntPolynomial(), 3) == IntPolynomial()


def test_immutable():
    with pytest.raises(AttributeError):
        WORKED.coeffs = (1,)


def test_series_over_one_minus_t():
    # 1 / (1-t)^2 = sum (m+1) t^m
    assert IntPolynomial([1]).series_over_one_minus_t(2, 4) == [1, 2, 3, 4, 5]
    assert IntPolynomial([1, 1]).series_over_one_minus_t(3, 3) == [1, 4, 9, 16]


@given(coeff_lists, st.integers(0, 4))
def test_reciprocal_is_an_involution(cs, extra):
    p = IntPolynomial(cs)
    deg = 0 if p.is_zero() else p.degree
    total = deg + extra
    assert substitute_reciprocal(substitute_reciprocal(p, total), total) == p


@given(coeff_lists, coeff_lists, st.integers(-3, 3))
def test_ring_homomorphism_to_rationals(a, b, x):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert evaluate_at_rational(add(p, q), x) == p.evaluate(x) + q.evaluate(x)
    assert evaluate_at_rational(multiply(p, q), x) == p.evaluate(x) * q.evaluate(x)


@given(coeff_lists, coeff_lists)
def test_multiplication_commutes_and_degrees_add(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert p * q == q * p
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree
    else:
        assert (p * q).is_zero()


@given(coeff_lists)
def test_series_inverts_multiplication(cs):
    p = IntPolynomial(cs)
    series = p.series_over_one_minus_t(3, 12)
    back = IntPolynomial(series) * IntPolynomial.one_minus_t_power(3)
    assert [back[k] for k in range(13)] == [p[k] for k in range(13)]
