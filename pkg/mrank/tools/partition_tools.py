from itertools import combinations
from math import prod
from typing import Iterable

from ..models.bipartition import Bipartition
from ..models.qudit_dims import QuditDims
from ..util.errors import LevelOutOfRangeError


def make_bipartition(dims: QuditDims, subset: Iterable[int]) -> Bipartition:
    subset = tuple(sorted(subset))
    complement = tuple(j for j in range(1, dims.n + 1) if j not in subset)
    return Bipartition(
        subset=subset,
        complement=complement,
        d_subset=prod(dims.dim(j) for j in subset),
        d_complement=prod(dims.dim(j) for j in complement),
    )


def check_level(dims: QuditDims, ell: int) -> int:
    if not 1 <= ell <= dims.n // 2:
        raise LevelOutOfRangeError(
            f"level {ell} outside 1..{dims.n // 2} for {dims.n} parties"
        )
    return ell


def enumerate_bipartitions(dims: QuditDims, ell: int) -> list[Bipartition]:
    """All C(n, ell) bipartitions with |I| = ell, lexicographic in I.

    When n = 2*ell both members of each complementary pair are listed.
    """
    check_level(dims, ell)
    return [
        make_bipartition(dims, subset)
        for subset in combinations(range(1, dims.n + 1), ell)
    ]


def all_levels(dims: QuditDims) -> list[list[Bipartition]]:
    return [enumerate_bipartitions(dims, ell) for ell in range(1, dims.n // 2 + 1)]


def canonical_cut(parties: Iterable[int], n: int) -> tuple[int, ...]:
    """Level-appropriate representative of the cut S | S-bar.

    The smaller side; for |S| = n/2 the side containing party 1.
    """
    side = tuple(sorted(set(parties)))
    if not side or len(side) >= n or side[0] < 1 or side[-1] > n:
        raise ValueError(f"{side} is not a nontrivial cut of 1..{n}")
    other = tuple(j for j in range(1, n + 1) if j not in side)
    if len(side) < len(other):
        return side
    if len(other) < len(side):
        return other
    return side if side[0] == 1 else other


def dedupe_level(
    level: list[Bipartition],
) -> list[tuple[Bipartition, Bipartition | None]]:
    """Keep one bipartition per complementary pair.

    Returns (kept, dropped partner) pairs; the partner is None on levels
    below n/2, where no pairs occur.
    """
    by_subset = {b.subset: b for b in level}
    kept = []
    for bipartition in level:
        if not bipartition.is_balanced():
            kept.append((bipartition, None))
        elif 1 in bipartition.subset:
            kept.append((bipartition, by_subset.get(bipartition.complement)))
    return kept
