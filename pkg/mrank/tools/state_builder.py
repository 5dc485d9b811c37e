import json
import logging
from functools import reduce
from itertools import product
from operator import mul
from typing import Iterable, Optional, Sequence, Union

from ..models.amplitude import Amplitude
from ..models.gaussian_rational import ZERO, GaussianRational
from ..models.qudit_dims import QuditDims
from ..models.state_tensor import MultiIndex, StateTensor
from ..util.errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    ParameterConflictError,
    ZeroStateError,
)

DimsLike = Union[QuditDims, Sequence[int]]


def as_dims(dims: DimsLike) -> QuditDims:
    if isinstance(dims, QuditDims):
        return dims
    return QuditDims(dims=tuple(dims))


def check_index(index: Sequence[int], dims: QuditDims) -> MultiIndex:
    index = tuple(int(v) for v in index)
    if len(index) != dims.n:
        raise DimensionMismatchError(
            f"ket {index} has {len(index)} components, dims declares {dims.n} parties"
        )
    for party, (value, d) in enumerate(zip(index, dims.dims), start=1):
        if not 0 <= value < d:
            raise IndexOutOfRangeError(
                f"index {value} of party {party} is outside 0..{d - 1}"
            )
    return index


def build_state(dims: DimsLike, terms: Iterable[tuple[Sequence[int], object]]) -> StateTensor:
    """Build a state from raw (multi-index, amplitude) pairs.

    Terms on the same ket are added. Exact values and each parameter are
    summed separately, so the result does not depend on input order; a ket
    left holding more than one kind of amplitude raises ParameterConflictError.

    Args:
        dims (QuditDims | Sequence[int]): local dimensions
        terms (Iterable): (multi-index, amplitude) pairs, amplitudes as
            Amplitude or anything GaussianRational.coerce accepts

    Returns:
        StateTensor: merged state with canonical amplitudes
    """
    dims = as_dims(dims)
    values: dict[MultiIndex, GaussianRational] = {}
    scales: dict[MultiIndex, dict[str, GaussianRational]] = {}
    for index, raw_amplitude in terms:
        index = check_index(index, dims)
        amplitude = Amplitude.of(raw_amplitude)
        if amplitude.is_parametric:
            per_ket = scales.setdefault(index, {})
            per_ket[amplitude.param] = per_ket.get(amplitude.param, ZERO) + amplitude.scale
        else:
            values[index] = values.get(index, ZERO) + amplitude.gaussian

    merged = []
    for index in sorted(values.keys() | scales.keys()):
        candidates = []
        value = values.get(index, ZERO)
        if not value.is_zero():
            candidates.append(Amplitude(gaussian=value))
        for name, scale in sorted(scales.get(index, {}).items()):
            if not scale.is_zero():
                candidates.append(Amplitude(param=name, scale=scale))
        if len(candidates) > 1:
            raise ParameterConflictError(
                f"ket {index} would hold {' + '.join(str(c) for c in candidates)}; "
                "a ket carries one value or one parameter"
            )
        if candidates:
            merged.append((index, candidates[0]))

    if not merged:
        raise ZeroStateError("all terms cancel; the zero state has no multirank profile")
    return StateTensor(dims=dims, terms=tuple(merged))


def format_ket(index: MultiIndex, dims: QuditDims) -> str:
    if dims.digit_kets():
        return "".join(str(v) for v in index)
    return ",".join(str(v) for v in index)


def serialize_state(state: StateTensor, structured: bool = False) -> str:
    """Write a state in the text grammar, or as the structured JSON document."""
    if structured:
        document = {
            "dims": list(state.dims.dims),
            "terms": [
                {"coeff": amplitude.to_string(), "ket": list(index)}
                for index, amplitude in state.terms
            ],
        }
        return json.dumps(document, indent=2)
    lines = ["dims " + " ".join(str(d) for d in state.dims.dims)]
    for index, amplitude in state.terms:
        lines.append(f"{amplitude.to_string()} |{format_ket(index, state.dims)}>")
    return "\n".join(lines) + "\n"


def basis_vector(d: int, k: int) -> list[int]:
    """Local computational basis vector |k> of a d-level system."""
    if not 0 <= k < d:
        raise IndexOutOfRangeError(f"basis index {k} outside 0..{d - 1}")
    return [1 if j == k else 0 for j in range(d)]


def _product_terms(vectors: Sequence[Sequence], coefficient: GaussianRational):
    local = []
    for vector in vectors:
        values = [(k, GaussianRational.coerce(v)) for k, v in enumerate(vector)]
        local.append([(k, v) for k, v in values if not v.is_zero()])
    for combination in product(*local):
        index = tuple(k for k, _ in combination)
        value = reduce(mul, (v for _, v in combination), coefficient)
        yield index, value


def tensor_product(*vectors: Sequence) -> StateTensor:
    """Fully product state |v_1> (x) ... (x) |v_n> from local coefficient vectors."""
    dims = as_dims([len(v) for v in vectors])
    return build_state(dims, _product_terms(vectors, GaussianRational(1)))


def sum_of_products(
    products: Sequence[Sequence[Sequence]],
    coefficients: Optional[Sequence] = None,
) -> StateTensor:
    """Sum of tensor products of local vectors, e.g. p0 (x) p0 (x) p2 + p0 (x) p2 (x) p0.

    Args:
        products (Sequence[Sequence[Sequence]]): one list of local vectors per summand
        coefficients (Sequence, optional): one exact coefficient per summand. Defaults to 1.

    Returns:
        StateTensor: the summed state
    """
    if not products:
        raise ZeroStateError("no summands given")
    dims = as_dims([len(v) for v in products[0]])
    if coefficients is None:
        coefficients = [1] * len(products)
    if len(coefficients) != len(products):
        raise DimensionMismatchError("one coefficient per summand is required")
    terms = []
    for vectors, coefficient in zip(products, coefficients):
        if [len(v) for v in vectors] != list(dims.dims):
            raise DimensionMismatchError(
                f"summand dims {[len(v) for v in vectors]} differ from {list(dims.dims)}"
            )
        terms.extend(_product_terms(vectors, GaussianRational.coerce(coefficient)))
    return build_state(dims, terms)


def ghz_state(dims: DimsLike) -> StateTensor:
    """Sum over k of |k k ... k> for k below the smallest local dimension."""
    dims = as_dims(dims)
    return build_state(dims, [((k,) * dims.n, 1) for k in range(min(dims.dims))])


def w_state(n: int, d: int = 2) -> StateTensor:
    """|10...0> + |010...0> + ... + |0...01> on n parties of dimension d."""
    dims = as_dims([d] * n)
    return build_state(
        dims, [(tuple(1 if j == k else 0 for j in range(n)), 1) for k in range(n)]
    )


def apply_local_operation(
    state: StateTensor, site: int, matrix: Sequence[Sequence]
) -> StateTensor:
    """Apply a d_site x d_site exact matrix to one tensor factor.

    Args:
        state (StateTensor): input state
        site (int): 1-based party the matrix acts on
        matrix (Sequence[Sequence]): rows of exact entries, M[a][b] maps |b> to |a>

    Returns:
        StateTensor: the transformed state
    """
    if not 1 <= site <= state.dims.n:
        raise DimensionMismatchError(f"site {site} outside parties 1..{state.dims.n}")
    d = state.dims.dim(site)
    if len(matrix) != d or any(len(row) != d for row in matrix):
        raise DimensionMismatchError(
            f"party {site} has dimension {d}, the matrix must be {d}x{d}"
        )
    entries = [[GaussianRational.coerce(v) for v in row] for row in matrix]

    terms = []
    position = site - 1
    for index, amplitude in state.terms:
        b = index[position]
        for a in range(d):
            scaled = amplitude.times(entries[a][b])
            if scaled is not None:
                terms.append((index[:position] + (a,) + index[position + 1 :], scaled))
    result = build_state(state.dims, terms)
    logging.debug(
        f"local operation on party {site}: {len(state)} terms -> {len(result)} terms"
    )
    return result
