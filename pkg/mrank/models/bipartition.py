from pydantic import BaseModel, ConfigDict, Field, model_validator


class Bipartition(BaseModel):
    """
    A cut of the parties {1..n} into the row side I (`subset`) and its ordered
    complement. Parties are numbered from 1, as in the printed profiles.
    """

    model_config = ConfigDict(frozen=True)

    subset: tuple[int, ...] = Field(
        description="Strictly increasing parties j_1 < ... < j_l on the row side.",
    )
    complement: tuple[int, ...] = Field(
        description="Strictly increasing remaining parties, on the column side.",
    )
    d_subset: int = Field(description="Product of the local dimensions over subset.")
    d_complement: int = Field(
        description="Product of the local dimensions over complement.",
    )

    @model_validator(mode="after")
    def validate_cut(self) -> "Bipartition":
        n = len(self.subset) + len(self.complement)
        for side in (self.subset, self.complement):
            if any(a >= b for a, b in zip(side, side[1:])):
                raise ValueError("bipartition sides must be strictly increasing")
        if set(self.subset) | set(self.complement) != set(range(1, n + 1)):
            raise ValueError("subset and complement must partition the parties 1..n")
        if not 1 <= len(self.subset) <= n // 2:
            raise ValueError(f"subset size must be between 1 and {n // 2}")
        if self.d_subset < 1 or self.d_complement < 1:
            raise ValueError("side dimensions must be positive")
        return self

    @property
    def ell(self) -> int:
        return len(self.subset)

    @property
    def n(self) -> int:
        return len(self.subset) + len(self.complement)

    @property
    def label(self) -> str:
        return f"I=[{','.join(str(j) for j in self.subset)}]"

    def is_balanced(self) -> bool:
        """True when the complement has the same size and is also a level entry."""
        return len(self.subset) == len(self.complement)
