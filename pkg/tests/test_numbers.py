from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from paralegendre.numbers import as_parameter, bracket, bracket_factorial

from strategies import params


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("p", [1, 2, 3, Fraction(7, 2)])
def test_even_and_odd_brackets(k, p):
    assert bracket(2 * k, p) == 2 * k
    assert bracket(2 * k + 1, p) == 2 * k + p


def test_bracket_examples():
    assert bracket(5, 1) == 5
    assert bracket(3, 2) == 4
    assert bracket(0, 7) == 0


def test_bracket_factorial_examples():
    assert bracket_factorial(0, 5) == 1
    assert bracket_factorial(4, 1) == 24
    # [3][2][1] at p=3 is 5 * 2 * 3
    assert bracket_factorial(3, 3) == 30


@given(st.integers(0, 60), params)
def test_factorial_recurrence(n, p):
    if n == 0:
        assert bracket_factorial(0, p) == 1
    else:
        assert bracket_factorial(n, p) == bracket(n, p) * bracket_factorial(n - 1, p)


@given(st.integers(0, 40))
def test_classical_reduction(n):
    assert bracket(n, 1) == n
    assert bracket_factorial(n, 1) == factorial(n)


@given(st.integers(1, 200), params)
def test_odd_bracket_identity(m, p):
    lhs = 2 * bracket(m - 1, p) + 1 + (p - 1) * (-1) ** (m - 1)
    assert lhs == bracket(2 * m - 1, p)


@given(st.integers(1, 200), params)
def test_positive_for_positive_index(n, p):
    assert bracket(n, p) > 0


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        bracket(-1, 2)
    with pytest.raises(ValueError):
        bracket_factorial(-3, 2)
    with pytest.raises(ValueError):
        as_parameter(0)
    with pytest.raises(ValueError):
        as_parameter("-1/2")
    with pytest.raises(TypeError):
        bracket(2.0, 1)


def test_parameter_parsing():
    assert as_parameter("7/2") == Fraction(7, 2)
    assert as_parameter(3) == 3
