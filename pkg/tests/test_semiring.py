from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropsym.errors import DomainError
from tropsym.semiring import INF, as_scalar, format_scalar, trop_add, trop_inv, trop_mul, trop_pow

finite = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
scalars = st.one_of(finite, st.just(INF))
LAWS = settings(max_examples=1000, deadline=None)


def test_basic_values():
    assert trop_add(Fraction(3), Fraction(5)) == 3
    assert trop_mul(Fraction(3), Fraction(5)) == 8
    assert trop_add(INF, Fraction(7)) == 7
    assert trop_mul(INF, Fraction(7)) is INF


def test_inverse_of_inf_is_an_error():
    with pytest.raises(DomainError, match="no tropical inverse of INF"):
        trop_inv(INF)
    assert trop_inv(Fraction(-5, 2)) == Fraction(5, 2)


@LAWS
@given(scalars, scalars, scalars)
def test_sum_is_associative_and_commutative(a, b, c):
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_add(a, b) == trop_add(b, a)


@LAWS
@given(scalars, scalars, scalars)
def test_product_is_associative_and_commutative(a, b, c):
    assert trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))
    assert trop_mul(a, b) == trop_mul(b, a)


@LAWS
@given(scalars, scalars, scalars)
def test_distributivity(a, b, c):
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))


@LAWS
@given(scalars)
def test_identities_and_idempotency(a):
    assert trop_add(a, a) == a
    assert trop_add(INF, a) == a
    assert trop_mul(Fraction(0), a) == a
    assert trop_mul(INF, a) is INF


@LAWS
@given(finite, finite, st.integers(min_value=1, max_value=10))
def test_frobenius_on_scalars(a, b, n):
    lhs = trop_pow(trop_add(a, b), n)
    assert lhs == trop_add(trop_pow(a, n), trop_pow(b, n))


def test_inf_powers():
    assert trop_pow(INF, 3) is INF
    assert trop_pow(INF, 0) == 0
    with pytest.raises(DomainError):
        trop_pow(INF, -1)


@pytest.mark.parametrize("text,value", [("3/2", Fraction(3, 2)), ("-4", Fraction(-4)), ("6/4", Fraction(3, 2))])
def test_scalar_text_round_trip(text, value):
    assert as_scalar(text) == value
    assert as_scalar(format_scalar(value)) == value


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    assert format_scalar(INF) == "inf"
    assert as_scalar("inf") is INF
