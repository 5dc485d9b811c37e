from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..tools.field_tools import ADMISSIBLE_PRIMES, check_admissible_prime
from .enums import RankPolicyKind

DEFAULT_GENERIC_PRIME = ADMISSIBLE_PRIMES[-1]


class RankPolicy(BaseModel):
    """
    How matrix ranks are computed.

    - exact: fraction-free elimination over the Gaussian integers.
    - fast: one modular rank at a random table prime, certified when it meets
      the rank upper bound, otherwise followed by the exact computation.
    - mod: modular rank at a fixed prime only (a lower bound on the exact rank).
    - generic: random substitution of the parameters over GF(p)[i].
    """

    model_config = ConfigDict(frozen=True)

    kind: RankPolicyKind = Field(
        default=RankPolicyKind.FAST, description="Rank computation strategy."
    )
    prime: Optional[int] = Field(
        default=None,
        description="Prime p = 3 (mod 4) for the mod and generic strategies.",
    )
    trials: int = Field(
        default=1, ge=1, description="Number of random substitutions (generic only)."
    )
    seed: int = Field(
        default=0,
        ge=0,
        lt=2**64,
        description="Master seed for prime draws and parameter substitutions.",
    )

    @model_validator(mode="after")
    def validate_prime(self) -> "RankPolicy":
        if self.kind == RankPolicyKind.MODULAR and self.prime is None:
            raise ValueError("the mod policy needs a prime")
        if self.prime is not None:
            check_admissible_prime(self.prime)
        return self

    @staticmethod
    def from_string(text: str, seed: int = 0, default_trials: int = 3) -> "RankPolicy":
        """Parse `exact`, `fast`, `mod:<p>`, `generic`, `generic:<trials>` or
        `generic:<trials>,<p>`."""
        name, _, argument = text.strip().partition(":")
        name = name.strip().lower()
        if name == RankPolicyKind.EXACT.value:
            return RankPolicy(kind=RankPolicyKind.EXACT, seed=seed)
        if name == RankPolicyKind.FAST.value:
            return RankPolicy(kind=RankPolicyKind.FAST, seed=seed)
        if name == RankPolicyKind.MODULAR.value:
            return RankPolicy(
                kind=RankPolicyKind.MODULAR, prime=int(argument), seed=seed
            )
        if name == RankPolicyKind.GENERIC.value:
            trials, _, prime = argument.partition(",")
            return RankPolicy(
                kind=RankPolicyKind.GENERIC,
                trials=int(trials) if trials.strip() else default_trials,
                prime=int(prime) if prime.strip() else DEFAULT_GENERIC_PRIME,
                seed=seed,
            )
        raise ValueError(f"unknown rank policy: {text!r}")

    def to_string(self) -> str:
        if self.kind == RankPolicyKind.MODULAR:
            return f"mod:{self.prime}"
        if self.kind == RankPolicyKind.GENERIC:
            return f"generic:{self.trials},{self.prime}"
        return self.kind.value
