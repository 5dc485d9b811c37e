"""Arithmetic in GF(p)[i]/(i^2 + 1).

For a prime p = 3 (mod 4), -1 is not a square mod p, so i^2 + 1 is
irreducible and GF(p)[i] is the field with p^2 elements. Elements are pairs
(re, im) of residues in 0..p-1.
"""

import logging
from fractions import Fraction

import numpy as np
from sympy import isprime

from ..models.gaussian_rational import GaussianRational
from ..util.errors import DenominatorDivisibleError, PrimeError

# The 20 largest primes p = 3 (mod 4) below 2^31. Products of two residues
# stay below 2^62, so int64 arrays never overflow once every product is
# reduced before it is summed.
ADMISSIBLE_PRIMES = (
    2147482739,
    2147482763,
    2147482811,
    2147482819,
    2147482859,
    2147482867,
    2147482943,
    2147482951,
    2147483059,
    2147483123,
    2147483171,
    2147483179,
    2147483323,
    2147483399,
    2147483423,
    2147483543,
    2147483563,
    2147483579,
    2147483587,
    2147483647,
)

MAX_PRIME = 2**31


def check_admissible_prime(p: int) -> int:
    """Return p if GF(p)[i] is a field we can work in, raise PrimeError otherwise."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise PrimeError(f"prime must be an integer, got {p!r}")
    if p >= MAX_PRIME:
        raise PrimeError(f"prime {p} is too large, must be below 2^31")
    if not isprime(p):
        raise PrimeError(f"{p} is not prime")
    if p % 4 != 3:
        raise PrimeError(f"{p} is not 3 mod 4, so i^2 + 1 splits over GF({p})")
    return p


def draw_prime(rng: np.random.Generator, exclude: frozenset = frozenset()) -> int:
    """Pick one prime from the table, skipping the excluded ones."""
    candidates = [p for p in ADMISSIBLE_PRIMES if p not in exclude]
    if not candidates:
        raise PrimeError("every admissible prime divides a denominator")
    return int(candidates[int(rng.integers(len(candidates)))])


def reduce_fraction(value: Fraction, p: int) -> int:
    if value.denominator % p == 0:
        raise DenominatorDivisibleError(f"{p} divides the denominator of {value}")
    return value.numerator * pow(value.denominator, -1, p) % p


def reduce_gaussian(value: GaussianRational, p: int) -> tuple[int, int]:
    return reduce_fraction(value.re, p), reduce_fraction(value.im, p)


def mul(a: tuple[int, int], b: tuple[int, int], p: int) -> tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p


def inverse(a: tuple[int, int], p: int) -> tuple[int, int]:
    """(x + yi)^-1 = (x - yi) / (x^2 + y^2); the norm is nonzero in a field."""
    norm = (a[0] * a[0] + a[1] * a[1]) % p
    if norm == 0:
        raise ZeroDivisionError("zero has no inverse")
    norm_inverse = pow(norm, -1, p)
    return a[0] * norm_inverse % p, (-a[1]) * norm_inverse % p


def rank_mod_p(re: np.ndarray, im: np.ndarray, p: int) -> int:
    """Rank of the matrix re + im*i over GF(p)[i].

    Both arrays are int64 with entries in 0..p-1 and are modified in place.
    Row echelon elimination with the first nonzero pivot in each column.
    """
    rows, cols = re.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero((re[rank:, col] != 0) | (im[rank:, col] != 0))
        if nonzero.size == 0:
            continue
        pivot_row = rank + int(nonzero[0])
        if pivot_row != rank:
            re[[rank, pivot_row]] = re[[pivot_row, rank]]
            im[[rank, pivot_row]] = im[[pivot_row, rank]]
        inv_re, inv_im = inverse((int(re[rank, col]), int(im[rank, col])), p)

        below = rank + 1 + np.flatnonzero(
            (re[rank + 1 :, col] != 0) | (im[rank + 1 :, col] != 0)
        )
        if below.size:
            a = re[below, col]
            b = im[below, col]
            # factor = entry / pivot, one per eliminated row
            f_re = (a * inv_re % p - b * inv_im % p) % p
            f_im = (a * inv_im % p + b * inv_re % p) % p
            pr = re[rank, col:]
            pi = im[rank, col:]
            t_re = (np.outer(f_re, pr) % p - np.outer(f_im, pi) % p) % p
            t_im = (np.outer(f_re, pi) % p + np.outer(f_im, pr) % p) % p
            re[below, col:] = (re[below, col:] - t_re) % p
            im[below, col:] = (im[below, col:] - t_im) % p
        rank += 1
    logging.debug(f"rank over GF({p})[i] of a {rows}x{cols} matrix: {rank}")
    return rank
