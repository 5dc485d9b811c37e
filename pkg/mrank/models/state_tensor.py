from dataclasses import dataclass
from typing import Iterator

from ..util.errors import IndexOutOfRangeError, ZeroStateError
from .amplitude import Amplitude
from .qudit_dims import QuditDims

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class StateTensor:
    """Sparse order-n coefficient tensor of a pure state.

    `terms` holds (multi-index, amplitude) pairs sorted by multi-index, so two
    tensors with the same content compare equal whatever order they were
    built in. Use `tools.state_builder.build_state` to merge raw input.
    """

    dims: QuditDims
    terms: tuple[tuple[MultiIndex, Amplitude], ...]

    def __post_init__(self):
        if not self.terms:
            raise ZeroStateError("the zero state has no multirank profile")
        previous = None
        for index, amplitude in self.terms:
            if len(index) != self.dims.n:
                raise IndexOutOfRangeError(
                    f"ket {index} has {len(index)} components, expected {self.dims.n}"
                )
            for position, (value, d) in enumerate(zip(index, self.dims.dims)):
                if not 0 <= value < d:
                    raise IndexOutOfRangeError(
                        f"index {value} of party {position + 1} is outside 0..{d - 1}"
                    )
            if previous is not None and index <= previous:
                raise ValueError("terms must be sorted by multi-index without repeats")
            if amplitude.is_zero():
                raise ValueError(f"zero amplitude stored at {index}")
            previous = index

    def __iter__(self) -> Iterator[tuple[MultiIndex, Amplitude]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> dict[MultiIndex, Amplitude]:
        return dict(self.terms)

    @property
    def parameters(self) -> tuple[str, ...]:
        return tuple(sorted({a.param for _, a in self.terms if a.param is not None}))

    @property
    def is_parametric(self) -> bool:
        return any(a.is_parametric for _, a in self.terms)
