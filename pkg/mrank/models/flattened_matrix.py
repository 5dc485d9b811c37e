from dataclasses import dataclass
from typing import Optional, Sequence

from .amplitude import Amplitude
from .bipartition import Bipartition

Position = tuple[int, int]


@dataclass(frozen=True)
class FlattenedMatrix:
    """Sparse rows x cols matrix of amplitudes, the matricization of a state.

    `entries` is sorted by (row, col) and holds nonzero entries only.
    `bipartition` is None for matrices not produced by a flattening.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Position, Amplitude], ...]
    bipartition: Optional[Bipartition] = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        for (row, col), _ in self.entries:
            if not (0 <= row < self.rows and 0 <= col < self.cols):
                raise ValueError(f"entry ({row}, {col}) outside {self.rows}x{self.cols}")

    @staticmethod
    def from_rows(rows: Sequence[Sequence], bipartition: Optional[Bipartition] = None):
        """Build a matrix from dense rows of amplitudes or exact numbers."""
        entries = []
        for r, row in enumerate(rows):
            for c, value in enumerate(row):
                amplitude = Amplitude.of(value)
                if not amplitude.is_zero():
                    entries.append(((r, c), amplitude))
        return FlattenedMatrix(
            rows=len(rows),
            cols=len(rows[0]) if rows else 0,
            entries=tuple(entries),
            bipartition=bipartition,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_parametric(self) -> bool:
        return any(a.is_parametric for _, a in self.entries)

    def as_dict(self) -> dict[Position, Amplitude]:
        return dict(self.entries)

    def nonzero_rows(self) -> list[int]:
        return sorted({row for (row, _), _ in self.entries})

    def nonzero_cols(self) -> list[int]:
        return sorted({col for (_, col), _ in self.entries})

    def transpose(self) -> "FlattenedMatrix":
        return FlattenedMatrix(
            rows=self.cols,
            cols=self.rows,
            entries=tuple(sorted(((c, r), a) for (r, c), a in self.entries)),
        )

    def to_dense_strings(self) -> list[list[str]]:
        dense = [["0"] * self.cols for _ in range(self.rows)]
        for (row, col), amplitude in self.entries:
            dense[row][col] = amplitude.to_string()
        return dense
