import random
from fractions import Fraction

import numpy as np
import pytest
from sympy import primerange

from mrank.models.gaussian_rational import GaussianRational
from mrank.tools import field_tools
from mrank.util.errors import DenominatorDivisibleError, PrimeError


# --------------------------------------------- prime table ---------------------------------------------
def test_prime_table_is_the_top_twenty():
    expected = [
        p
        for p in primerange(field_tools.ADMISSIBLE_PRIMES[0], field_tools.MAX_PRIME)
        if p % 4 == 3
    ]
    assert list(field_tools.ADMISSIBLE_PRIMES) == expected
    assert len(expected) == 20


def test_check_admissible_prime():
    assert field_tools.check_admissible_prime(3) == 3
    assert field_tools.check_admissible_prime(2147483647) == 2147483647


@pytest.mark.parametrize("p", [5, 9, 2, 2**31 + 11, 7.0, True])
def test_check_admissible_prime_rejects(p):
    with pytest.raises(PrimeError):
        field_tools.check_admissible_prime(p)


def test_draw_prime_excludes():
    rng = np.random.default_rng(1)
    exclude = frozenset(field_tools.ADMISSIBLE_PRIMES[:-1])
    assert field_tools.draw_prime(rng, exclude) == field_tools.ADMISSIBLE_PRIMES[-1]
    with pytest.raises(PrimeError):
        field_tools.draw_prime(rng, frozenset(field_tools.ADMISSIBLE_PRIMES))


# --------------------------------------------- reduction ---------------------------------------------
def test_reduce_gaussian():
    assert field_tools.reduce_gaussian(GaussianRational(Fraction(1, 2), -1), 7) == (4, 6)


def test_reduce_divisible_denominator():
    with pytest.raises(DenominatorDivisibleError):
        field_tools.reduce_fraction(Fraction(1, 14), 7)


def test_inverse():
    p = 2147483647
    rng = random.Random(3)
    for _ in range(50):
        a = (rng.randrange(p), rng.randrange(1, p))
        assert field_tools.mul(a, field_tools.inverse(a, p), p) == (1, 0)
    with pytest.raises(ZeroDivisionError):
        field_tools.inverse((0, 0), 7)


# --------------------------------------------- rank_mod_p ---------------------------------------------
def test_rank_mod_p_gaussian_dependency():
    # rows (1, i) and (i, -1) are dependent over GF(p)[i]
    p = 7
    re = np.array([[1, 0], [0, p - 1]], dtype=np.int64)
    im = np.array([[0, 1], [1, 0]], dtype=np.int64)
    assert field_tools.rank_mod_p(re, im, p) == 1


def test_rank_mod_p_large_residues_do_not_overflow():
    p = field_tools.ADMISSIBLE_PRIMES[-1]
    re = np.full((4, 4), p - 1, dtype=np.int64)
    im = np.full((4, 4), p - 1, dtype=np.int64)
    assert field_tools.rank_mod_p(re, im, p) == 1
    re = np.diag([p - 1, p - 2, p - 3, p - 4]).astype(np.int64)
    im = np.full((4, 4), p - 1, dtype=np.int64)
    assert 1 <= field_tools.rank_mod_p(re, im, p) <= 4


def test_rank_mod_p_empty():
    empty = np.zeros((0, 0), dtype=np.int64)
    assert field_tools.rank_mod_p(empty, empty.copy(), 7) == 0
