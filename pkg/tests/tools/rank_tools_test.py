import logging
import random
from fractions import Fraction
from unittest.mock import patch

import numpy as np
import pytest

from mrank.models.amplitude import Amplitude
from mrank.models.enums import Certainty, RankMode, RankPolicyKind
from mrank.models.flattened_matrix import FlattenedMatrix
from mrank.models.gaussian_rational import GaussianRational
from mrank.models.rank_policy import RankPolicy
from mrank.tools import (
    field_tools,
    flatten_tools,
    partition_tools,
    rank_tools,
    state_parser,
)
from mrank.util.errors import (
    DenominatorDivisibleError,
    MatrixTooLargeError,
    ParametricEntryError,
    PrimeError,
)
from tests.data.tools import multirank_data

P = field_tools.ADMISSIBLE_PRIMES[-1]


def _flattening(text: str, subset):
    state = state_parser.parse_state(text)
    return flatten_tools.flatten(state, partition_tools.make_bipartition(state.dims, subset))


# --------------------------------------------- exact_rank ---------------------------------------------
def test_exact_rank_identity():
    matrix = FlattenedMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    result = rank_tools.exact_rank(matrix)
    assert result.value == 3
    assert result.mode == RankMode.EXACT
    assert result.certainty == Certainty.EXACT


def test_exact_rank_zero_matrix():
    assert rank_tools.exact_rank(FlattenedMatrix.from_rows([[0] * 4, [0] * 4])).value == 0


def test_exact_rank_published_flattenings():
    assert rank_tools.exact_rank(_flattening(multirank_data.w3_state_text, [1])).value == 2
    assert rank_tools.exact_rank(_flattening(multirank_data.cluster4_state_text, [1, 3])).value == 4


def test_exact_rank_gaussian_dependency():
    matrix = FlattenedMatrix.from_rows([["1", "i"], ["i", "-1"]])
    assert rank_tools.exact_rank(matrix).value == 1


def test_exact_rank_rational_entries():
    matrix = FlattenedMatrix.from_rows([["1/2", "1/3"], ["3", "2"], ["1/7", "2/21"]])
    assert rank_tools.exact_rank(matrix).value == 1


def test_exact_rank_skipped_pivot_column():
    matrix = FlattenedMatrix.from_rows([[1, 2, 3, 4], [2, 4, 7, 9], [3, 6, 10, 13]])
    assert rank_tools.exact_rank(matrix).value == 2


def test_exact_rank_parametric():
    matrix = FlattenedMatrix.from_rows([[Amplitude.parameter("a"), 1]])
    with pytest.raises(ParametricEntryError):
        rank_tools.exact_rank(matrix)


def test_bareiss_rank_large_entries():
    big = 10**40
    rows = [[(big, 1), (big + 1, 0)], [(big * 3, 3), (3 * big + 3, 0)]]
    assert rank_tools.bareiss_rank(rows) == 1


# --------------------------------------------- oracle ---------------------------------------------
def test_oracle_examples():
    assert rank_tools.oracle_rank_minors(FlattenedMatrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rank_tools.oracle_rank_minors(FlattenedMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank_tools.oracle_rank_minors(_flattening(multirank_data.w3_state_text, [2])) == 2


def test_oracle_too_large():
    with pytest.raises(MatrixTooLargeError):
        rank_tools.oracle_rank_minors(FlattenedMatrix.from_rows([[1] * 7]))


def test_exact_rank_matches_oracle_on_random_matrices():
    rng = random.Random(20240501)
    for _ in range(1000):
        matrix = FlattenedMatrix.from_rows(multirank_data.random_matrix_rows(rng))
        expected = rank_tools.oracle_rank_minors(matrix)
        assert rank_tools.exact_rank(matrix).value == expected
        assert rank_tools.exact_rank(matrix.transpose()).value == expected


def test_exact_rank_invariant_under_scaling_and_permutation():
    rng = random.Random(77)
    for _ in range(200):
        rows = multirank_data.random_matrix_rows(rng)
        expected = rank_tools.exact_rank(FlattenedMatrix.from_rows(rows)).value
        scaled = []
        for row in rows:
            factor = GaussianRational()
            while factor.is_zero():
                factor = multirank_data.random_gaussian_rational(rng)
            scaled.append([value * factor for value in row])
        rng.shuffle(scaled)
        order = list(range(len(scaled[0])))
        rng.shuffle(order)
        permuted = [[row[c] for c in order] for row in scaled]
        assert rank_tools.exact_rank(FlattenedMatrix.from_rows(permuted)).value == expected


# --------------------------------------------- modular_rank ---------------------------------------------
def test_modular_rank_small_prime():
    assert rank_tools.modular_rank(FlattenedMatrix.from_rows([[2, 0], [0, 2]]), 3).value == 2


def test_modular_rank_annihilated_pivots():
    matrix = FlattenedMatrix.from_rows([[3, 0], [0, 3]])
    result = rank_tools.modular_rank(matrix, 3)
    assert result.value == 0
    assert result.certainty == Certainty.PROBABILISTIC
    assert rank_tools.exact_rank(matrix).value == 2


def test_modular_rank_w_state():
    result = rank_tools.modular_rank(_flattening(multirank_data.w3_state_text, [1]), 7)
    assert result.value == 2
    assert result.certainty == Certainty.EXACT
    assert result.prime == 7


def test_modular_rank_rejects_prime():
    matrix = FlattenedMatrix.from_rows([[1]])
    with pytest.raises(PrimeError):
        rank_tools.modular_rank(matrix, 13)
    with pytest.raises(DenominatorDivisibleError):
        rank_tools.modular_rank(FlattenedMatrix.from_rows([["1/7"]]), 7)


def test_modular_rank_never_exceeds_exact():
    rng = random.Random(9)
    prime_stream = np.random.default_rng(9)
    for _ in range(300):
        matrix = FlattenedMatrix.from_rows(multirank_data.random_matrix_rows(rng))
        exact = rank_tools.exact_rank(matrix).value
        values = [
            rank_tools.modular_rank(matrix, field_tools.draw_prime(prime_stream)).value
            for _ in range(3)
        ]
        assert max(values) <= exact
        if exact not in values:
            logging.warning(f"no prime reached the exact rank {exact}: {values}")


# --------------------------------------------- generic_rank ---------------------------------------------
def test_generic_rank_ghz_with_parameter():
    matrix = _flattening(multirank_data.ghz_parametric_state_text, [1])
    result = rank_tools.generic_rank(matrix, 5, P, seed=1)
    assert result.value == 2
    assert result.mode == RankMode.GENERIC
    assert result.certainty == Certainty.PROBABILISTIC
    assert result.trials == 5
    # 2x4 flattening with two nonzero rows and columns
    assert result.failure_bound == Fraction(2, P) ** 5


def test_generic_rank_single_parameter():
    matrix = FlattenedMatrix.from_rows([[Amplitude.parameter("a"), 0], [0, 0]])
    assert rank_tools.generic_rank(matrix, 3, P, seed=2).value == 1


def test_generic_rank_repeated_parameter():
    state_text = "dims 2 2\na |00>\na |11>\n"
    matrix = _flattening(state_text, [1])
    assert rank_tools.generic_rank(matrix, 3, P, seed=3).value == 2


def test_generic_rank_shared_parameter_with_scale():
    # rows (a, 2a) and (1, 2) are dependent for every a
    matrix = FlattenedMatrix.from_rows(
        [[Amplitude.parameter("a"), Amplitude.parameter("a", 2)], [1, 2]]
    )
    assert rank_tools.generic_rank(matrix, 4, P, seed=4).value == 1


def test_generic_rank_monotone_in_trials():
    rng = random.Random(12)
    for seed in range(20):
        rows = [
            [
                (
                    Amplitude.parameter(rng.choice("ab"), rng.randint(1, 3))
                    if rng.random() < 0.3
                    else rng.randint(0, 2)
                )
                for _ in range(3)
            ]
            for _ in range(3)
        ]
        matrix = FlattenedMatrix.from_rows(rows)
        fewer = rank_tools.generic_rank(matrix, 1, 7, seed=seed).value
        more = rank_tools.generic_rank(matrix, 4, 7, seed=seed).value
        assert fewer <= more


def test_generic_rank_needs_a_trial():
    with pytest.raises(ValueError):
        rank_tools.generic_rank(FlattenedMatrix.from_rows([[1]]), 0, P)


def test_generic_rank_bound_ignores_missed_trials():
    # over GF(3)[i] a draws zero with probability 1/9; the bound uses the
    # row/column bound, never the observed rank
    matrix = FlattenedMatrix.from_rows([[Amplitude.parameter("a")]])
    for seed in range(50):
        result = rank_tools.generic_rank(matrix, 1, 3, seed=seed)
        assert result.value in (0, 1)
        assert result.failure_bound == Fraction(1, 3)


def test_generic_rank_bound_capped_at_one():
    rows = [[Amplitude.parameter("a") if r == c else 0 for c in range(5)] for r in range(5)]
    result = rank_tools.generic_rank(FlattenedMatrix.from_rows(rows), 2, 3, seed=1)
    assert result.failure_bound == 1


def test_generic_rank_prime_divides_denominator():
    matrix = FlattenedMatrix.from_rows([[Amplitude.parameter("a"), Fraction(1, 3)]])
    with pytest.raises(DenominatorDivisibleError):
        rank_tools.generic_rank(matrix, 1, 3, seed=0)


# --------------------------------------------- rank_dispatch ---------------------------------------------
def test_dispatch_fast_certified_without_exact_pass():
    matrix = FlattenedMatrix.from_rows([[1, 2], [3, 4]])
    with patch.object(rank_tools, "exact_rank") as exact_mock:
        result = rank_tools.rank_dispatch(matrix, RankPolicy(seed=5))
    exact_mock.assert_not_called()
    assert result.value == 2
    assert result.mode == RankMode.MODULAR
    assert result.certainty == Certainty.EXACT
    assert result.prime in field_tools.ADMISSIBLE_PRIMES


def test_dispatch_fast_verifies_deficient_rank():
    matrix = FlattenedMatrix.from_rows([[1, 2], [2, 4]])
    result = rank_tools.rank_dispatch(matrix, RankPolicy(seed=5))
    assert result.value == 1
    assert result.mode == RankMode.EXACT


@patch.object(field_tools, "draw_prime", side_effect=[P, field_tools.ADMISSIBLE_PRIMES[0]])
def test_dispatch_fast_resamples_divisible_prime(draw_mock):
    matrix = FlattenedMatrix.from_rows([[Fraction(1, P), 0], [0, 1]])
    result = rank_tools.rank_dispatch(matrix, RankPolicy(seed=5))
    assert result.value == 2
    assert result.prime == field_tools.ADMISSIBLE_PRIMES[0]
    assert draw_mock.call_count == 2
    assert draw_mock.call_args_list[1].args[1] == frozenset({P})


@patch.object(field_tools, "draw_prime", side_effect=PrimeError("exhausted"))
def test_dispatch_fast_falls_back_to_exact(draw_mock):
    result = rank_tools.rank_dispatch(FlattenedMatrix.from_rows([[1]]), RankPolicy())
    assert result.mode == RankMode.EXACT


def test_dispatch_exact_and_mod():
    matrix = FlattenedMatrix.from_rows([[3, 0], [0, 3]])
    assert rank_tools.rank_dispatch(matrix, RankPolicy(kind=RankPolicyKind.EXACT)).value == 2
    assert (
        rank_tools.rank_dispatch(matrix, RankPolicy(kind=RankPolicyKind.MODULAR, prime=3)).value
        == 0
    )


def test_dispatch_generic():
    matrix = _flattening(multirank_data.ghz_parametric_state_text, [1])
    policy = RankPolicy.from_string("generic:3", seed=8)
    result = rank_tools.rank_dispatch(matrix, policy)
    assert result.mode == RankMode.GENERIC
    assert result.value == 2


@pytest.mark.parametrize("policy_text", ["exact", "fast", f"mod:{P}"])
def test_dispatch_parametric_under_non_generic(policy_text):
    matrix = _flattening(multirank_data.ghz_parametric_state_text, [1])
    with pytest.raises(ParametricEntryError):
        rank_tools.rank_dispatch(matrix, RankPolicy.from_string(policy_text))


def test_dispatch_is_reproducible():
    matrix = FlattenedMatrix.from_rows([[1, 2], [3, 4]])
    first = rank_tools.rank_dispatch(matrix, RankPolicy(seed=99))
    second = rank_tools.rank_dispatch(matrix, RankPolicy(seed=99))
    assert first == second
