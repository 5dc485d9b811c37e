from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .enums import Certainty, RankMode


@dataclass(frozen=True)
class RankResult:
    """Rank of one matrix together with how it was obtained.

    A modular result never exceeds the exact rank. It is reported with
    EXACT certainty only when it met the rank upper bound. Generic results
    carry the per-matrix failure probability bound.
    """

    value: int
    mode: RankMode
    certainty: Certainty = Certainty.EXACT
    prime: Optional[int] = None
    trials: Optional[int] = None
    failure_bound: Optional[Fraction] = None

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("rank must be nonnegative")
        if self.mode != RankMode.EXACT and self.prime is None:
            raise ValueError(f"{self.mode.value} rank requires the prime it used")
        if self.mode == RankMode.GENERIC and self.certainty != Certainty.PROBABILISTIC:
            raise ValueError("generic ranks are probabilistic")

    @property
    def is_probabilistic(self) -> bool:
        return self.certainty == Certainty.PROBABILISTIC

    def describe(self) -> str:
        if self.mode == RankMode.EXACT:
            return "exact"
        if self.mode == RankMode.MODULAR:
            return f"modular({self.prime})"
        return f"generic({self.trials}, {self.prime})"
