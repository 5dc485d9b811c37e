from dataclasses import dataclass
from typing import Optional, Union

import regex

from .gaussian_rational import ONE, GaussianRational, Rational

PARAMETER_NAME_REGEX = regex.compile(r"[A-Za-z_][A-Za-z0-9_]*")
RESERVED_NAMES = {"i", "dims"}


def is_parameter_name(name: str) -> bool:
    return (
        isinstance(name, str)
        and PARAMETER_NAME_REGEX.fullmatch(name) is not None
        and name not in RESERVED_NAMES
    )


@dataclass(frozen=True, slots=True)
class Amplitude:
    """Coefficient of one basis ket.

    Exactly one of `gaussian` (an exact value) or `param` (a symbolic
    parameter name) is set. Parameter amplitudes carry a nonzero `scale`, so
    `-a` is stored as param="a", scale=-1.
    """

    gaussian: Optional[GaussianRational] = None
    param: Optional[str] = None
    scale: GaussianRational = ONE

    def __post_init__(self):
        if (self.gaussian is None) == (self.param is None):
            raise ValueError("amplitude must be exactly one of gaussian or param")
        if self.param is not None:
            if not is_parameter_name(self.param):
                raise ValueError(f"invalid parameter name: {self.param!r}")
            object.__setattr__(self, "scale", GaussianRational.coerce(self.scale))
            if self.scale.is_zero():
                raise ValueError("parameter amplitude with zero scale")
        else:
            object.__setattr__(self, "gaussian", GaussianRational.coerce(self.gaussian))
            object.__setattr__(self, "scale", ONE)

    @staticmethod
    def of(value: Union["Amplitude", GaussianRational, Rational, str]) -> "Amplitude":
        if isinstance(value, Amplitude):
            return value
        return Amplitude(gaussian=GaussianRational.coerce(value))

    @staticmethod
    def parameter(name: str, scale: Union[GaussianRational, Rational] = 1) -> "Amplitude":
        return Amplitude(param=name, scale=GaussianRational.coerce(scale))

    @property
    def is_parametric(self) -> bool:
        return self.param is not None

    def is_zero(self) -> bool:
        return self.gaussian is not None and self.gaussian.is_zero()

    def times(self, factor: GaussianRational) -> Optional["Amplitude"]:
        """Multiply by an exact factor; None when the product is zero."""
        if factor.is_zero():
            return None
        if self.param is not None:
            return Amplitude(param=self.param, scale=self.scale * factor)
        return Amplitude(gaussian=self.gaussian * factor)

    def to_string(self) -> str:
        if self.param is None:
            return self.gaussian.to_string()
        if self.scale == ONE:
            return self.param
        if self.scale == -ONE:
            return f"-{self.param}"
        return f"({self.scale.to_string()})*{self.param}"

    def __str__(self) -> str:
        return self.to_string()
