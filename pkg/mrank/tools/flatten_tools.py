from math import prod
from typing import Iterable, Sequence

from ..models.bipartition import Bipartition
from ..models.flattened_matrix import FlattenedMatrix
from ..models.qudit_dims import QuditDims
from ..models.state_tensor import StateTensor
from ..util.errors import DimensionMismatchError


def mixed_radix(digits: Sequence[int], radices: Sequence[int]) -> int:
    """Big-endian mixed-radix value: the first digit is most significant."""
    value = 0
    for digit, radix in zip(digits, radices):
        value = value * radix + digit
    return value


def _split_index(
    index: Sequence[int], row_parties: Sequence[int], col_parties: Sequence[int], dims: QuditDims
) -> tuple[int, int]:
    row = mixed_radix(
        [index[j - 1] for j in row_parties], [dims.dim(j) for j in row_parties]
    )
    col = mixed_radix(
        [index[j - 1] for j in col_parties], [dims.dim(j) for j in col_parties]
    )
    return row, col


def row_col_of(
    index: Sequence[int], bipartition: Bipartition, dims: QuditDims
) -> tuple[int, int]:
    """Matrix position of a multi-index in the flattening along `bipartition`.

    row = mixed radix of (i_j1, ..., i_jl) over I, col = the same over the
    complement; dims (2,2,2), I={1}, index (0,1,0) -> (0, 2).
    """
    return _split_index(index, bipartition.subset, bipartition.complement, dims)


def _check_consistent(state: StateTensor, bipartition: Bipartition):
    if bipartition.n != state.dims.n:
        raise DimensionMismatchError(
            f"bipartition of {bipartition.n} parties applied to a {state.dims.n}-party state"
        )
    d_subset = prod(state.dims.dim(j) for j in bipartition.subset)
    d_complement = prod(state.dims.dim(j) for j in bipartition.complement)
    if (d_subset, d_complement) != (bipartition.d_subset, bipartition.d_complement):
        raise DimensionMismatchError(
            f"{bipartition.label} has side dimensions {bipartition.d_subset}x{bipartition.d_complement}, "
            f"dims {state.dims.dims} give {d_subset}x{d_complement}"
        )


def flatten(state: StateTensor, bipartition: Bipartition) -> FlattenedMatrix:
    """Matricization of `state` with rows indexed by I and columns by its complement.

    Built from the nonzero terms only; the dense tensor is never formed.
    """
    _check_consistent(state, bipartition)
    entries = sorted(
        (row_col_of(index, bipartition, state.dims), amplitude)
        for index, amplitude in state.terms
    )
    return FlattenedMatrix(
        rows=bipartition.d_subset,
        cols=bipartition.d_complement,
        entries=tuple(entries),
        bipartition=bipartition,
    )


def flatten_parties(state: StateTensor, row_parties: Iterable[int]) -> FlattenedMatrix:
    """Flattening with any nonempty proper subset of parties on the row side.

    Unlike `flatten` the row side may be the larger one, so the flattening of
    a complement can be compared with the transpose of the original.
    """
    dims = state.dims
    row_parties = tuple(sorted(set(row_parties)))
    col_parties = tuple(j for j in range(1, dims.n + 1) if j not in row_parties)
    if not row_parties or not col_parties or not set(row_parties) <= set(range(1, dims.n + 1)):
        raise DimensionMismatchError(f"{row_parties} is not a nontrivial cut of 1..{dims.n}")
    entries = sorted(
        (_split_index(index, row_parties, col_parties, dims), amplitude)
        for index, amplitude in state.terms
    )
    return FlattenedMatrix(
        rows=prod(dims.dim(j) for j in row_parties),
        cols=prod(dims.dim(j) for j in col_parties),
        entries=tuple(entries),
    )
