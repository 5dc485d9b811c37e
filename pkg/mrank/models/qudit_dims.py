from math import prod

from pydantic import BaseModel, ConfigDict, Field, field_validator


class QuditDims(BaseModel):
    """
    Local dimensions d_1..d_n of an n-partite system. The global Hilbert space
    has dimension `delta`, the product of all local dimensions.
    """

    model_config = ConfigDict(frozen=True)

    dims: tuple[int, ...] = Field(
        description="Local dimension of each party, party 1 first.",
    )

    @field_validator("dims")
    @classmethod
    def validate_dims(cls, dims: tuple[int, ...]) -> tuple[int, ...]:
        if len(dims) < 2:
            raise ValueError("at least two parties are required")
        for d in dims:
            if d < 2:
                raise ValueError(f"local dimensions must be at least 2, got {d}")
        return dims

    @staticmethod
    def of(*dims: int) -> "QuditDims":
        if len(dims) == 1 and not isinstance(dims[0], int):
            dims = tuple(dims[0])
        return QuditDims(dims=tuple(dims))

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def delta(self) -> int:
        return prod(self.dims)

    def dim(self, party: int) -> int:
        """Local dimension of a 1-based party."""
        return self.dims[party - 1]

    def digit_kets(self) -> bool:
        """Whether kets can be written as plain digit strings."""
        return max(self.dims) <= 10
