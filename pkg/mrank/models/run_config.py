from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .enums import OutputFormat
from .rank_policy import RankPolicy


class RunConfig(BaseModel):
    """Validated settings of one profiler run."""

    model_config = ConfigDict(frozen=True)

    input_path: str = Field(description="Path of the state file.")
    level: Optional[int] = Field(
        default=None,
        ge=1,
        description="Single level to compute; None computes every level.",
    )
    policy: RankPolicy = Field(
        default_factory=RankPolicy, description="Rank policy, including the seed."
    )
    output_format: OutputFormat = Field(
        default=OutputFormat.TEXT, description="Report format."
    )
    dedupe: bool = Field(
        default=False,
        description="Report one bipartition per complementary pair at ell = n/2.",
    )
    dump_matrices: bool = Field(
        default=False, description="Include every flattening as dense rows."
    )
    workers: int = Field(default=1, ge=1, description="Threads evaluating bipartitions.")

    @property
    def seed(self) -> int:
        return self.policy.seed
