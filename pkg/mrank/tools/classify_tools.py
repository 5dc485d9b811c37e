from ..models.bipartition import Bipartition
from ..models.enums import RankPolicyKind
from ..models.multirank_profile import MultirankProfile
from ..models.verdict import EntanglementVerdict
from ..util.errors import LevelOutOfRangeError


def _require_complete(profile: MultirankProfile):
    if not profile.is_complete:
        raise LevelOutOfRangeError(
            f"classification needs every level 1..{profile.dims.n // 2}, "
            f"profile has {list(profile.ells)}"
        )


def is_gme(profile: MultirankProfile) -> bool:
    """True when every flattening rank exceeds 1."""
    _require_complete(profile)
    return all(entry.rank > 1 for entry in profile.entries())


def is_fully_product(profile: MultirankProfile) -> bool:
    """True when every single-party flattening has rank 1."""
    _require_complete(profile)
    return all(entry.rank == 1 for entry in profile.level(1))


def product_cuts(profile: MultirankProfile) -> tuple[Bipartition, ...]:
    """Cuts with a flattening of rank <= 1, one per complementary pair.

    At ell = n/2 the cut is reported by the side containing party 1, even
    when only its partner's entry has rank <= 1.
    """
    low = {entry.bipartition.subset for entry in profile.entries() if entry.rank <= 1}
    cuts = []
    for entry in profile.entries():
        bipartition = entry.bipartition
        if bipartition.is_balanced() and 1 not in bipartition.subset:
            continue
        if bipartition.subset in low or bipartition.complement in low:
            cuts.append(bipartition)
    return tuple(cuts)


def verdict(profile: MultirankProfile) -> EntanglementVerdict:
    """Classify the state a complete profile was computed from.

    Args:
        profile (MultirankProfile): profile covering every level

    Returns:
        EntanglementVerdict: GME flag, fully product flag and the rank-1 cuts
    """
    _require_complete(profile)
    return EntanglementVerdict(
        gme=is_gme(profile),
        fully_product=is_fully_product(profile),
        product_cuts=product_cuts(profile),
        generic=profile.policy.kind == RankPolicyKind.GENERIC,
    )
