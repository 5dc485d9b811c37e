import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

import numpy as np

from ..models.bipartition import Bipartition
from ..models.enums import RankMode, RankPolicyKind
from ..models.multirank_profile import MultirankProfile, ProfileEntry
from ..models.rank_policy import RankPolicy
from ..models.state_tensor import StateTensor
from . import flatten_tools, partition_tools, rank_tools


def matrix_rng(seed: int, ell: int, position: int) -> np.random.Generator:
    """Random stream of one bipartition, independent of evaluation order."""
    return np.random.default_rng([seed, ell, position])


def _rank_entry(
    state: StateTensor, bipartition: Bipartition, position: int, policy: RankPolicy
) -> ProfileEntry:
    matrix = flatten_tools.flatten(state, bipartition)
    result = rank_tools.rank_dispatch(
        matrix, policy, matrix_rng(policy.seed, bipartition.ell, position)
    )
    if result.value == 0:
        logging.warning(
            f"{bipartition.label}: {result.describe()} rank 0 on a nonzero flattening"
        )
    logging.debug(f"{bipartition.label}: rank {result.value} ({result.describe()})")
    return ProfileEntry(bipartition=bipartition, result=result)


def _evaluate(
    state: StateTensor, ells: list[int], policy: RankPolicy, workers: int
) -> tuple[tuple[ProfileEntry, ...], ...]:
    # at ell = n/2 only the side containing party 1 is ranked; its partner is
    # the transposed flattening and takes the same result
    tasks = []
    partners = {}
    for ell in ells:
        level = partition_tools.enumerate_bipartitions(state.dims, ell)
        for position, bipartition in enumerate(level):
            if bipartition.is_balanced() and 1 not in bipartition.subset:
                continue
            tasks.append((ell, position, bipartition))
        for kept, partner in partition_tools.dedupe_level(level):
            if partner is not None:
                partners[partner.subset] = kept.subset
    logging.info(
        f"profiling {state.dims.n} parties over {len(tasks)} bipartitions "
        f"with policy {policy.to_string()}"
    )
    if policy.kind == RankPolicyKind.GENERIC and not state.is_parametric:
        logging.warning("generic rank policy requested for a state without parameters")

    def run(task):
        ell, position, bipartition = task
        return _rank_entry(state, bipartition, position, policy)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            entries = list(executor.map(run, tasks))
    else:
        entries = [run(task) for task in tasks]
    ranked = {entry.bipartition.subset: entry for entry in entries}

    levels = []
    for ell in ells:
        level = []
        for bipartition in partition_tools.enumerate_bipartitions(state.dims, ell):
            source = partners.get(bipartition.subset)
            if source is None:
                level.append(ranked[bipartition.subset])
            else:
                level.append(
                    ProfileEntry(bipartition=bipartition, result=ranked[source].result)
                )
        levels.append(tuple(level))
    logging.info(f"profile finished: {[[e.rank for e in level] for level in levels]}")
    return tuple(levels)


def multirank_profile(
    state: StateTensor,
    policy: Optional[RankPolicy] = None,
    workers: int = 1,
    levels: Optional[Iterable[int]] = None,
) -> MultirankProfile:
    """Ranks of every flattening of `state` with 1 <= |I| <= n//2.

    Args:
        state (StateTensor): nonzero state
        policy (RankPolicy, optional): rank policy. Defaults to fast-then-verify with seed 0.
        workers (int, optional): threads evaluating bipartitions. Defaults to 1.
        levels (Iterable[int], optional): subset of levels to compute. Defaults to all.

    Returns:
        MultirankProfile: profile in canonical order
    """
    if policy is None:
        policy = RankPolicy()
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if levels is None:
        ells = list(range(1, state.dims.n // 2 + 1))
    else:
        ells = sorted({partition_tools.check_level(state.dims, ell) for ell in levels})
    return MultirankProfile(
        dims=state.dims, levels=_evaluate(state, ells, policy, workers), policy=policy
    )


def profile_level(
    state: StateTensor, ell: int, policy: Optional[RankPolicy] = None
) -> tuple[ProfileEntry, ...]:
    """One level of the profile, identical to the same level of the full profile."""
    return multirank_profile(state, policy, levels=[ell]).levels[0]


def max_failure_bound(profile: MultirankProfile):
    """Largest per-matrix failure bound of a generic profile, None otherwise."""
    bounds = [
        entry.result.failure_bound
        for entry in profile.entries()
        if entry.result.mode == RankMode.GENERIC
    ]
    return max(bounds) if bounds else None
