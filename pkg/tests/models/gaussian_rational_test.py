import random
from fractions import Fraction

import pytest

from mrank.models.gaussian_rational import (
    IMAGINARY_UNIT,
    ONE,
    ZERO,
    GaussianRational,
)
from tests.data.tools import multirank_data


# --------------------------------------------- arithmetic ---------------------------------------------
def test_components_are_reduced():
    value = GaussianRational(Fraction(2, 4), Fraction(-6, 3))
    assert value.re == Fraction(1, 2)
    assert value.im == -2


def test_imaginary_unit_squared():
    assert IMAGINARY_UNIT * IMAGINARY_UNIT == -ONE


def test_mixed_arithmetic_with_ints():
    value = GaussianRational(1, 2)
    assert value + 1 == GaussianRational(2, 2)
    assert 1 - value == GaussianRational(0, -2)
    assert 2 * value == GaussianRational(2, 4)


def test_division():
    value = GaussianRational(1, 1) / GaussianRational(1, -1)
    assert value == IMAGINARY_UNIT


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_norm_and_conjugate():
    value = GaussianRational(Fraction(1, 2), 3)
    assert value.norm() == Fraction(37, 4)
    assert value * value.conjugate() == GaussianRational(value.norm())


def test_denominator_lcm():
    assert GaussianRational(Fraction(1, 4), Fraction(5, 6)).denominator_lcm() == 12
    assert GaussianRational(3, -2).is_gaussian_integer()


# --------------------------------------------- to_string ---------------------------------------------
def test_to_string():
    assert ONE.to_string() == "1"
    assert GaussianRational(Fraction(-1, 2)).to_string() == "-1/2"
    assert IMAGINARY_UNIT.to_string() == "i"
    assert GaussianRational(0, -3).to_string() == "-3i"
    assert GaussianRational(Fraction(1, 2), Fraction(3, 4)).to_string() == "1/2+3/4i"
    assert GaussianRational(2, -1).to_string() == "2-i"
    assert ZERO.to_string() == "0"


def test_coerce_string():
    assert GaussianRational.coerce("1/2-3/4 i") == GaussianRational(
        Fraction(1, 2), Fraction(-3, 4)
    )


def test_coerce_rejects_bool():
    with pytest.raises(TypeError):
        GaussianRational.coerce(True)


def test_zero_is_falsy():
    assert not ZERO
    assert IMAGINARY_UNIT


def test_arithmetic_is_exact():
    rng = random.Random(31)
    for _ in range(500):
        a = multirank_data.random_gaussian_rational(rng, 9)
        b = multirank_data.random_gaussian_rational(rng, 9)
        assert (a + b) - b == a
        assert a * b == b * a
        assert -(-a) == a
        if not b.is_zero():
            assert (a * b) / b == a
            assert (a / b) * b == a
