from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Union

Rational = Union[int, Fraction]


def _format_fraction(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Exact complex number re + im*i with rational components.

    Components are stored as `fractions.Fraction`, which is always reduced and
    carries a positive denominator.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(value: Union["GaussianRational", Rational, str]) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a Gaussian rational")
        if isinstance(value, (int, Fraction)):
            return GaussianRational(Fraction(value))
        if isinstance(value, str):
            # local import, the parser depends on this module
            from ..tools.state_parser import parse_gaussian

            return parse_gaussian(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("division by a zero Gaussian rational")
        return self * other.conjugate() * GaussianRational(1 / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def denominator_lcm(self) -> int:
        return lcm(self.re.denominator, self.im.denominator)

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_string(self) -> str:
        """Canonical text form, e.g. `1`, `-1/2`, `i`, `-3i`, `1/2+3/4i`."""
        if self.im == 0:
            return _format_fraction(self.re)
        magnitude = abs(self.im)
        imag = "i" if magnitude == 1 else f"{_format_fraction(magnitude)}i"
        if self.re == 0:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{_format_fraction(self.re)}{sign}{imag}"

    def __str__(self) -> str:
        return self.to_string()


def _maybe_coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational(Fraction(value))
    return NotImplemented


ZERO = GaussianRational()
ONE = GaussianRational(1)
IMAGINARY_UNIT = GaussianRational(0, 1)
