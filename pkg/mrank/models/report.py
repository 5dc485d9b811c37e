from typing import Optional

from pydantic import BaseModel, Field


class ReportEntry(BaseModel):
    label: str = Field(description="Bipartition label, e.g. 'I=[1,3]'.")
    subset: list[int] = Field(description="Row-side parties, 1-based.")
    complement: list[int] = Field(description="Column-side parties, 1-based.")
    rank: int = Field(ge=0, description="Flattening rank.")
    mode: str = Field(description="exact, modular or generic.")
    prime: Optional[int] = Field(default=None, description="Prime used, if any.")
    trials: Optional[int] = Field(default=None, description="Generic trials, if any.")
    certainty: str = Field(description="exact or probabilistic.")
    failure_bound: Optional[str] = Field(
        default=None, description="Exact failure probability bound as a fraction string."
    )
    paired_with: Optional[str] = Field(
        default=None,
        description="Label of the complementary bipartition dropped by deduplication.",
    )
    matrix: Optional[list[list[str]]] = Field(
        default=None, description="Dense rows of the flattening."
    )


class ReportLevel(BaseModel):
    ell: int = Field(ge=1)
    entries: list[ReportEntry]


class ReportVerdict(BaseModel):
    gme: bool
    fully_product: bool
    product_cuts: list[str] = Field(default_factory=list)
    generic: bool = False


class MultirankReport(BaseModel):
    """Structured profiler output."""

    dims: list[int]
    policy: str
    seed: int
    profile: list[list[int]] = Field(
        description="Ranks per computed level, complementary pairs included."
    )
    levels: list[ReportLevel]
    verdict: Optional[ReportVerdict] = Field(
        default=None, description="Absent when only one level was computed."
    )
