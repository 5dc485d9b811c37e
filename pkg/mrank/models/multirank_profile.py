from dataclasses import dataclass
from math import comb
from typing import Optional

from .bipartition import Bipartition
from .qudit_dims import QuditDims
from .rank_policy import RankPolicy
from .rank_result import RankResult


@dataclass(frozen=True)
class ProfileEntry:
    bipartition: Bipartition
    result: RankResult

    @property
    def rank(self) -> int:
        return self.result.value


@dataclass(frozen=True)
class MultirankProfile:
    """Flattening ranks of a state, grouped by level.

    `levels` holds one tuple per computed level, in increasing ell, each in
    lexicographic bipartition order. A full profile covers ell = 1..n//2.
    """

    dims: QuditDims
    levels: tuple[tuple[ProfileEntry, ...], ...]
    policy: RankPolicy

    def __post_init__(self):
        ells = [level[0].bipartition.ell for level in self.levels if level]
        if len(ells) != len(self.levels):
            raise ValueError("profile levels must not be empty")
        if ells != sorted(set(ells)):
            raise ValueError("profile levels must be distinct and increasing")
        for ell, level in zip(ells, self.levels):
            if len(level) != comb(self.dims.n, ell):
                raise ValueError(
                    f"level {ell} has {len(level)} entries, expected {comb(self.dims.n, ell)}"
                )

    @property
    def ells(self) -> tuple[int, ...]:
        return tuple(level[0].bipartition.ell for level in self.levels)

    @property
    def is_complete(self) -> bool:
        return self.ells == tuple(range(1, self.dims.n // 2 + 1))

    def ranks(self) -> list[list[int]]:
        return [[entry.rank for entry in level] for level in self.levels]

    def level(self, ell: int) -> Optional[tuple[ProfileEntry, ...]]:
        for level in self.levels:
            if level[0].bipartition.ell == ell:
                return level
        return None

    def entries(self) -> list[ProfileEntry]:
        return [entry for level in self.levels for entry in level]

    @property
    def is_probabilistic(self) -> bool:
        return any(entry.result.is_probabilistic for entry in self.entries())
