"""Exact rationals, orientation-preserving affine maps and ordering parameters.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever touches a float.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction, refusing floats."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational: {value!r}") from None
    return Fraction(value)


def format_rational(q: RationalLike) -> str:
    return str(Fraction(q))


def sign_of(q) -> int:
    return (q > 0) - (q < 0)


def in_localization(q: Fraction, m: int) -> bool:
    """True iff ``q`` lies in Z[1/m], i.e. its denominator divides a power of m."""
    d = Fraction(q).denominator
    g = math.gcd(d, m)
    while g > 1:
        while d % g == 0:
            d //= g
        g = math.gcd(d, m)
    return d == 1


@dataclass(frozen=True)
class AffineMap:
    """The map ``x -> slope * x + shift`` with ``slope > 0``."""

    slope: Fraction
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "slope", to_rational(self.slope))
        object.__setattr__(self, "shift", to_rational(self.shift))
        if self.slope <= 0:
            raise ValueError(f"affine map must preserve orientation, got slope {self.slope}")

    def __call__(self, x):
        return self.slope * x + self.shift

    @classmethod
    def identity(cls) -> AffineMap:
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def translation(cls, t) -> AffineMap:
        return cls(Fraction(1), t)

    @classmethod
    def dilation(cls, r) -> AffineMap:
        return cls(r, Fraction(0))

    def compose(self, other: AffineMap) -> AffineMap:
        """``self o other``: apply ``other`` first."""
        return AffineMap(self.slope * other.slope, self.slope * other.shift + self.shift)

    def inverse(self) -> AffineMap:
        return AffineMap(1 / self.slope, -self.shift / self.slope)

    def fixed_point(self) -> Optional[Fraction]:
        """The unique fixed point, or None for translations (including the identity)."""
        if self.slope == 1:
            return None
        return self.shift / (1 - self.slope)

    def __str__(self):
        return f"{self.slope}x + {self.shift}"


def affine_apply(m: AffineMap, x) -> Fraction:
    return m(to_rational(x))


def affine_compose(f: AffineMap, g: AffineMap) -> AffineMap:
    return f.compose(g)


def affine_invert(m: AffineMap) -> AffineMap:
    return m.inverse()


class Side(enum.Enum):
    BELOW = "below"
    ABOVE = "above"


@functools.total_ordering
@dataclass(frozen=True)
class OrderParam:
    """Base point of a Smirnov-type ordering.

    A finite parameter is a rational ``value`` displaced infinitesimally to one
    ``side``; ``infinite`` is +1 or -1 for the two limit parameters (and 0
    otherwise).  Comparison with a rational never ties.
    """

    value: Optional[Fraction] = None
    side: Optional[Side] = None
    infinite: int = 0

    def __post_init__(self):
        if self.infinite:
            if self.infinite not in (1, -1) or self.value is not None or self.side is not None:
                raise ValueError("infinite parameters carry no value and no side")
        else:
            if self.value is None or self.side is None:
                raise ValueError("finite parameters need a value and a side")
            object.__setattr__(self, "value", to_rational(self.value))
            object.__setattr__(self, "side", Side(self.side))

    @classmethod
    def finite(cls, value, side=Side.ABOVE) -> OrderParam:
        return cls(value=to_rational(value), side=Side(side))

    @classmethod
    def above(cls, value) -> OrderParam:
        return cls.finite(value, Side.ABOVE)

    @classmethod
    def below(cls, value) -> OrderParam:
        return cls.finite(value, Side.BELOW)

    @property
    def kind(self) -> str:
        return {1: "PlusInfinity", -1: "MinusInfinity", 0: "Finite"}[self.infinite]

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    def compare(self, t) -> int:
        """+1 if this parameter lies above the rational ``t``, else -1."""
        if self.infinite:
            return self.infinite
        if self.value != t:
            return 1 if self.value > t else -1
        return 1 if self.side is Side.ABOVE else -1

    def _key(self):
        if self.infinite:
            return (self.infinite, Fraction(0), 0)
        return (0, self.value, 1 if self.side is Side.ABOVE else 0)

    def __lt__(self, other):
        if not isinstance(other, OrderParam):
            return NotImplemented
        return self._key() < other._key()

    def to_json(self):
        if self.infinite:
            return "+inf" if self.infinite > 0 else "-inf"
        return {"value": format_rational(self.value), "side": self.side.value}

    @classmethod
    def from_json(cls, data) -> OrderParam:
        if isinstance(data, str):
            text = data.strip().lower()
            if text in ("+inf", "inf"):
                return PLUS_INFINITY
            if text == "-inf":
                return MINUS_INFINITY
            return cls.above(text)
        if isinstance(data, dict):
            if "value" not in data:
                raise ValueError("order parameter needs a 'value'")
            return cls.finite(str(data["value"]), Side(str(data.get("side", "above")).lower()))
        raise ValueError(f"cannot read order parameter from {data!r}")

    def __str__(self):
        if self.infinite:
            return "+inf" if self.infinite > 0 else "-inf"
        return f"{self.value}{'+' if self.side is Side.ABOVE else '-'}"


PLUS_INFINITY = OrderParam(infinite=1)
MINUS_INFINITY = OrderParam(infinite=-1)

LESS = -1
EQUAL = 0
GREATER = 1


def param_compare(p: OrderParam, t) -> int:
    """Compare ``p`` against a rational: GREATER (1) or LESS (-1), never EQUAL."""
    return p.compare(to_rational(t))
