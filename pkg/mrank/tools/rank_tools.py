import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Optional

import numpy as np

from ..models.enums import Certainty, RankMode, RankPolicyKind
from ..models.flattened_matrix import FlattenedMatrix
from ..models.gaussian_rational import GaussianRational
from ..models.rank_policy import RankPolicy
from ..models.rank_result import RankResult
from ..util.errors import (
    DenominatorDivisibleError,
    MatrixTooLargeError,
    ParametricEntryError,
    PrimeError,
)
from . import field_tools

GaussianInteger = tuple[int, int]
G_ZERO: GaussianInteger = (0, 0)
G_ONE: GaussianInteger = (1, 0)

ORACLE_MAX_SIZE = 6


# --------------------------------------------- Gaussian integers ---------------------------------------------
def _g_mul(x: GaussianInteger, y: GaussianInteger) -> GaussianInteger:
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def _g_sub(x: GaussianInteger, y: GaussianInteger) -> GaussianInteger:
    return x[0] - y[0], x[1] - y[1]


def _g_exact_div(x: GaussianInteger, y: GaussianInteger) -> GaussianInteger:
    """x / y for y dividing x in Z[i]: x * conj(y) / |y|^2."""
    norm = y[0] * y[0] + y[1] * y[1]
    numerator = _g_mul(x, (y[0], -y[1]))
    return numerator[0] // norm, numerator[1] // norm


# --------------------------------------------- matrix preparation ---------------------------------------------
def _require_exact(matrix: FlattenedMatrix):
    if matrix.is_parametric:
        raise ParametricEntryError(
            "matrix has parametric entries; use the generic rank policy"
        )


def _compressed_positions(matrix: FlattenedMatrix):
    """Map nonzero rows and columns to 0..R-1 and 0..C-1; zero lines never change the rank."""
    row_position = {row: i for i, row in enumerate(matrix.nonzero_rows())}
    col_position = {col: j for j, col in enumerate(matrix.nonzero_cols())}
    return row_position, col_position


def _dense_gaussian(matrix: FlattenedMatrix) -> list[list[GaussianRational]]:
    row_position, col_position = _compressed_positions(matrix)
    dense = [[GaussianRational()] * len(col_position) for _ in row_position]
    for (row, col), amplitude in matrix.entries:
        dense[row_position[row]][col_position[col]] = amplitude.gaussian
    return dense


def clear_denominators(dense: list[list[GaussianRational]]) -> list[list[GaussianInteger]]:
    """Scale every row by the lcm of its denominators, giving Gaussian integers.

    Row scaling by a nonzero rational leaves the rank unchanged.
    """
    cleared = []
    for row in dense:
        multiplier = lcm(1, *(value.denominator_lcm() for value in row))
        cleared.append(
            [
                (int(value.re * multiplier), int(value.im * multiplier))
                for value in row
            ]
        )
    return cleared


# --------------------------------------------- exact rank ---------------------------------------------
def bareiss_rank(rows: list[list[GaussianInteger]]) -> int:
    """Rank over Q(i) by fraction-free elimination over Z[i].

    Every update divides exactly by the previous pivot, so entries stay
    minors of the input and their size stays bounded. `rows` is modified.
    """
    height = len(rows)
    width = len(rows[0]) if rows else 0
    previous = G_ONE
    rank = 0
    for col in range(width):
        if rank == height:
            break
        pivot_row = next((r for r in range(rank, height) if rows[r][col] != G_ZERO), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        pivot_line = rows[rank]
        for r in range(rank + 1, height):
            line = rows[r]
            lead = line[col]
            for c in range(col + 1, width):
                value = _g_mul(pivot, line[c])
                if lead != G_ZERO:
                    value = _g_sub(value, _g_mul(lead, pivot_line[c]))
                if previous != G_ONE:
                    value = _g_exact_div(value, previous)
                line[c] = value
            line[col] = G_ZERO
        previous = pivot
        rank += 1
    return rank


def exact_rank(matrix: FlattenedMatrix) -> RankResult:
    """Rank over the Gaussian rationals.

    Args:
        matrix (FlattenedMatrix): matrix without parametric entries

    Returns:
        RankResult: exact rank
    """
    _require_exact(matrix)
    value = bareiss_rank(clear_denominators(_dense_gaussian(matrix)))
    return RankResult(value=value, mode=RankMode.EXACT)


# --------------------------------------------- modular rank ---------------------------------------------
def _upper_bound(matrix: FlattenedMatrix) -> int:
    return min(len(matrix.nonzero_rows()), len(matrix.nonzero_cols()))


def modular_rank(matrix: FlattenedMatrix, p: int) -> RankResult:
    """Rank over GF(p)[i], never above the exact rank.

    The result is marked EXACT when it meets the upper bound
    min(nonzero rows, nonzero cols), PROBABILISTIC otherwise.
    """
    field_tools.check_admissible_prime(p)
    _require_exact(matrix)
    row_position, col_position = _compressed_positions(matrix)
    re = np.zeros((len(row_position), len(col_position)), dtype=np.int64)
    im = np.zeros_like(re)
    for (row, col), amplitude in matrix.entries:
        i, j = row_position[row], col_position[col]
        re[i, j], im[i, j] = field_tools.reduce_gaussian(amplitude.gaussian, p)
    value = field_tools.rank_mod_p(re, im, p)
    certainty = (
        Certainty.EXACT if value == _upper_bound(matrix) else Certainty.PROBABILISTIC
    )
    return RankResult(value=value, mode=RankMode.MODULAR, certainty=certainty, prime=p)


# --------------------------------------------- generic rank ---------------------------------------------
def generic_rank(
    matrix: FlattenedMatrix,
    trials: int,
    p: int,
    seed: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> RankResult:
    """Generic rank of a matrix with parameter entries.

    Each trial substitutes an independent uniform element of GF(p)[i] for
    every parameter and takes the rank over GF(p)[i]; the maximum over
    trials is returned. A k x k minor has degree at most k in the
    parameters, so a trial misses the generic rank with probability at most
    deg/p (Schwartz-Zippel). deg is taken as min(nonzero rows, nonzero cols),
    which bounds the size of every nonvanishing minor whatever the trials
    observe. The bound is capped at 1.

    The prime is fixed by the caller; a prime dividing a denominator of an
    exact entry raises DenominatorDivisibleError, which the profiler reports
    as a policy mismatch.

    Args:
        matrix (FlattenedMatrix): matrix, possibly with parametric entries
        trials (int): number of substitutions, at least 1
        p (int): prime = 3 (mod 4)
        seed (int, optional): seed for a fresh random stream, ignored when rng is given
        rng (np.random.Generator, optional): random stream to draw from

    Returns:
        RankResult: generic rank with the (deg/p)^trials failure bound
    """
    if trials < 1:
        raise ValueError("at least one trial is required")
    field_tools.check_admissible_prime(p)
    if rng is None:
        rng = np.random.default_rng(seed)
    row_position, col_position = _compressed_positions(matrix)
    parameters = sorted({a.param for _, a in matrix.entries if a.is_parametric})

    fixed = []
    scaled = []
    for (row, col), amplitude in matrix.entries:
        i, j = row_position[row], col_position[col]
        if amplitude.is_parametric:
            scale = field_tools.reduce_gaussian(amplitude.scale, p)
            scaled.append((i, j, amplitude.param, scale))
        else:
            fixed.append((i, j, field_tools.reduce_gaussian(amplitude.gaussian, p)))

    best = 0
    shape = (len(row_position), len(col_position))
    for trial in range(trials):
        draws = rng.integers(0, p, size=(len(parameters), 2))
        values = {
            name: (int(draws[k, 0]), int(draws[k, 1])) for k, name in enumerate(parameters)
        }
        re = np.zeros(shape, dtype=np.int64)
        im = np.zeros_like(re)
        for i, j, (a, b) in fixed:
            re[i, j], im[i, j] = a, b
        for i, j, name, scale in scaled:
            re[i, j], im[i, j] = field_tools.mul(scale, values[name], p)
        value = field_tools.rank_mod_p(re, im, p)
        logging.debug(f"generic rank trial {trial}: {value}")
        best = max(best, value)

    return RankResult(
        value=best,
        mode=RankMode.GENERIC,
        certainty=Certainty.PROBABILISTIC,
        prime=p,
        trials=trials,
        failure_bound=min(Fraction(1), Fraction(_upper_bound(matrix), p) ** trials),
    )


# --------------------------------------------- dispatch ---------------------------------------------
def _fast_then_verify(matrix: FlattenedMatrix, rng: np.random.Generator) -> RankResult:
    tried: set[int] = set()
    while True:
        try:
            p = field_tools.draw_prime(rng, frozenset(tried))
        except PrimeError:
            logging.warning("no admissible prime left for the fast path, using exact rank")
            return exact_rank(matrix)
        try:
            result = modular_rank(matrix, p)
            break
        except DenominatorDivisibleError:
            logging.warning(f"prime {p} divides a denominator, drawing another")
            tried.add(p)
    if result.certainty == Certainty.EXACT:
        logging.debug(f"modular rank {result.value} at p={p} meets the upper bound")
        return result
    logging.debug(f"modular rank {result.value} at p={p} below the upper bound, verifying")
    return exact_rank(matrix)


def rank_dispatch(
    matrix: FlattenedMatrix,
    policy: RankPolicy,
    rng: Optional[np.random.Generator] = None,
) -> RankResult:
    """Compute a rank under `policy`.

    Args:
        matrix (FlattenedMatrix): input matrix
        policy (RankPolicy): exact, fast, mod or generic
        rng (np.random.Generator, optional): random stream. Defaults to one seeded with policy.seed.

    Returns:
        RankResult: rank and how it was obtained
    """
    if rng is None:
        rng = np.random.default_rng(policy.seed)
    if policy.kind == RankPolicyKind.GENERIC:
        return generic_rank(matrix, policy.trials, policy.prime, rng=rng)
    if matrix.is_parametric:
        raise ParametricEntryError(
            f"matrix has parametric entries, which the {policy.to_string()} policy cannot rank"
        )
    if policy.kind == RankPolicyKind.EXACT:
        return exact_rank(matrix)
    if policy.kind == RankPolicyKind.MODULAR:
        return modular_rank(matrix, policy.prime)
    return _fast_then_verify(matrix, rng)


# --------------------------------------------- test oracle ---------------------------------------------
def _determinant(square: list[list[GaussianInteger]]) -> GaussianInteger:
    """Determinant by cofactor expansion along rows, memoised on the remaining columns."""
    size = len(square)

    @lru_cache(maxsize=None)
    def minor(row: int, columns: int) -> GaussianInteger:
        if row == size:
            return G_ONE
        total = G_ZERO
        sign = 1
        for col in range(size):
            if not columns >> col & 1:
                continue
            entry = square[row][col]
            if entry != G_ZERO:
                term = _g_mul(entry, minor(row + 1, columns & ~(1 << col)))
                total = (total[0] + sign * term[0], total[1] + sign * term[1])
            sign = -sign
        return total

    return minor(0, (1 << size) - 1)


def oracle_rank_minors(matrix: FlattenedMatrix) -> int:
    """Largest k with a nonzero k x k minor, by exhaustive search. Both dimensions <= 6."""
    if matrix.rows > ORACLE_MAX_SIZE or matrix.cols > ORACLE_MAX_SIZE:
        raise MatrixTooLargeError(
            f"oracle handles at most {ORACLE_MAX_SIZE}x{ORACLE_MAX_SIZE}, got {matrix.rows}x{matrix.cols}"
        )
    _require_exact(matrix)
    dense = [[GaussianRational()] * matrix.cols for _ in range(matrix.rows)]
    for (row, col), amplitude in matrix.entries:
        dense[row][col] = amplitude.gaussian
    cleared = clear_denominators(dense)
    for k in range(min(matrix.rows, matrix.cols), 0, -1):
        for rows in combinations(range(matrix.rows), k):
            for cols in combinations(range(matrix.cols), k):
                square = [[cleared[r][c] for c in cols] for r in rows]
                if _determinant(square) != G_ZERO:
                    return k
    return 0
