"""Group families in exact normal form.

Supported families:

* ``F1Group(r)``  -- <a, b | b a' b^-1 = a'^r>, the extension of Z[1/m] by Z,
  elements ``b^k a^s`` stored as ``F1Elem(k, s)``.
* ``TowerGroup``  -- iterated extensions of Z by Z where generator ``a_j`` acts
  on ``a_i`` (i < j) by a sign; elements ``a_n^{e_n} ... a_1^{e_1}``.
* ``GnGroup(n)``  -- <a, b, c | bab^-1 = a^-1, cbc^-1 = b^3, cac^-1 = a^n>,
  modelled as the split extension Z[1/|n|] x| B(1,3).

plus the carriers that appear as quotients and convex subgroups:
``BS13Group`` (B(1,3) as maps ``3^k x + t``), ``IntegerGroup`` and
``RankOneGroup(m)`` (the additive group Z[1/m]).
"""
from __future__ import annotations

import functools
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    BallCapError,
    InvalidDescriptorError,
    UnknownGeneratorError,
    WordSyntaxError,
)
from .exact import AffineMap, format_rational, in_localization, to_rational

DEFAULT_BALL_CAP = 200_000
_ONE = Fraction(1)
_ZERO = Fraction(0)


def ball_cap() -> int:
    raw = os.environ.get("ORDSPACE_BALL_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"ORDSPACE_BALL_CAP must be an integer, got {raw!r}") from None
    return DEFAULT_BALL_CAP


# --------------------------------------------------------------------------
# words

Word = List[Tuple[str, object]]

_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9]*)(?:\^(?:(-?\d+)|\{\s*(-?\d+(?:\s*/\s*\d+)?)\s*\}))?$")


def parse_word(text: str, generators: Optional[Sequence[str]] = None) -> Word:
    """Parse ``"b a^-5 c^{1/3}"`` into ``[("b", 1), ("a", -5), ("c", Fraction(1, 3))]``.

    ``id`` and ``1`` denote the identity.  Exponents in braces may be rational;
    whether a rational exponent makes sense is decided at evaluation time.
    """
    word: Word = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        if token in ("id", "1"):
            continue
        m = _TOKEN.match(token)
        if not m:
            raise WordSyntaxError(f"cannot parse token {token!r}", match.start())
        name, int_exp, frac_exp = m.groups()
        if generators is not None and name not in generators:
            raise UnknownGeneratorError(
                f"unknown generator {name!r} at position {match.start()}; "
                f"expected one of {', '.join(generators)}"
            )
        if frac_exp is not None:
            exp = Fraction(frac_exp.replace(" ", ""))
            if exp.denominator == 1:
                exp = int(exp)
        elif int_exp is not None:
            exp = int(int_exp)
        else:
            exp = 1
        word.append((name, exp))
    return word


def _fmt_power(name: str, exp) -> str:
    if exp == 1:
        return name
    if isinstance(exp, Fraction) and exp.denominator != 1:
        return f"{name}^{{{exp}}}"
    return f"{name}^{exp}"


def format_word(word: Sequence[Tuple[str, object]]) -> str:
    """Inverse of :func:`parse_word` after merging adjacent equal generators."""
    merged: List[List] = []
    for name, exp in word:
        if merged and merged[-1][0] == name:
            merged[-1][1] += exp
        else:
            merged.append([name, exp])
    parts = [_fmt_power(n, e) for n, e in merged if e != 0]
    return " ".join(parts) if parts else "id"


# --------------------------------------------------------------------------
# base class


@dataclass(frozen=True)
class Split:
    """A designated convex normal subgroup together with its quotient.

    ``project`` is the quotient map, ``lift`` a set-theoretic section of it,
    ``embed`` the inclusion of the subgroup and ``sub_part`` its inverse on
    kernel elements.
    """

    group: "Group"
    level: int
    sub: "Group"
    quotient: "Group"
    project: Callable
    lift: Callable
    embed: Callable
    sub_part: Callable

    def in_sub(self, x) -> bool:
        return self.project(x) == self.quotient.identity()


class Group:
    """Common machinery; subclasses supply the arithmetic."""

    family: str = "?"
    generator_names: Tuple[str, ...] = ()
    divisible_generators: Tuple[str, ...] = ()

    # -- to be provided by subclasses
    def identity(self):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def gen_power(self, name: str, exp):
        raise NotImplementedError

    def levels(self, x) -> tuple:
        """Coordinates along the designated series, top level first."""
        raise NotImplementedError

    @property
    def series_length(self) -> int:
        raise NotImplementedError

    def elem_to_json(self, x) -> dict:
        raise NotImplementedError

    def format_elem(self, x) -> str:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def level_generator(self, level: int):
        """A generator of the ``level``-th series quotient (1 = bottom)."""
        raise NotImplementedError

    def split(self, level: int = 1) -> Split:
        raise NotImplementedError(f"{self.family} has no designated convex normal subgroups")

    def in_level(self, x, level: int) -> bool:
        """Membership in the ``level``-th term G_level of the series."""
        coords = self.levels(x)
        return all(c == 0 for c in coords[: len(coords) - level])

    # -- shared
    def is_identity(self, x) -> bool:
        return x == self.identity()

    def power(self, x, n: int):
        if n < 0:
            x, n = self.inv(x), -n
        result = self.identity()
        while n:
            if n & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            n >>= 1
        return result

    def product(self, *xs):
        result = self.identity()
        for x in xs:
            result = self.mul(result, x)
        return result

    def conj(self, g, x):
        """``g x g^-1``."""
        return self.mul(self.mul(g, x), self.inv(g))

    def symmetric_generators(self) -> List[Tuple[str, int]]:
        out = []
        for name in self.generator_names:
            out.append((name, 1))
            out.append((name, -1))
        return out

    def parse_word(self, text: str) -> Word:
        return parse_word(text, self.generator_names)

    def eval_word(self, word) -> object:
        if isinstance(word, str):
            word = self.parse_word(word)
        result = self.identity()
        for name, exp in word:
            if name not in self.generator_names:
                raise UnknownGeneratorError(f"unknown generator {name!r} for family {self.family}")
            if isinstance(exp, Fraction) and exp.denominator != 1 and name not in self.divisible_generators:
                raise ValueError(f"generator {name!r} only takes integer exponents")
            result = self.mul(result, self.gen_power(name, exp))
        return result

    def __call__(self, text: str):
        return self.eval_word(text)


# --------------------------------------------------------------------------
# F1: rank-one-by-Z


class F1Elem(NamedTuple):
    k: int
    s: Fraction


@dataclass(frozen=True)
class F1Group(Group):
    """<a, b | b a' b^-1 = a'^r>.  Internally ``r > 1``: when the given ratio is
    below 1 the generator ``b`` is replaced by its inverse, and ``flipped``
    records this so that words and printed normal forms still use the
    caller's ``b``."""

    r_given: Fraction
    r: Fraction = field(init=False)
    flipped: bool = field(init=False)
    m: int = field(init=False)

    family = "f1"
    generator_names = ("a", "b")
    divisible_generators = ("a",)

    def __post_init__(self):
        r = to_rational(self.r_given)
        if r <= 0 or r == 1:
            raise InvalidDescriptorError(f"F1 needs a positive ratio r != 1, got {r}")
        object.__setattr__(self, "r_given", r)
        object.__setattr__(self, "flipped", r < 1)
        object.__setattr__(self, "r", 1 / r if r < 1 else r)
        object.__setattr__(self, "m", r.numerator * r.denominator)

    def identity(self):
        return F1Elem(0, _ZERO)

    def mul(self, x, y):
        return F1Elem(x.k + y.k, x.s * self.r ** (-y.k) + y.s)

    def inv(self, x):
        return F1Elem(-x.k, -x.s * self.r ** x.k)

    def contains(self, x) -> bool:
        return (
            isinstance(x, F1Elem)
            and isinstance(x.k, int)
            and isinstance(x.s, (int, Fraction))
            and in_localization(x.s, self.m)
        )

    def elem(self, k, s) -> F1Elem:
        """Element from coordinates relative to the caller's ``b``."""
        s = to_rational(s)
        if not in_localization(s, self.m):
            raise ValueError(f"{s} is not in Z[1/{self.m}]")
        return F1Elem(-k if self.flipped else k, s)

    def gen_power(self, name, exp):
        if name == "a":
            return self.translation(to_rational(exp))
        return F1Elem(-exp if self.flipped else exp, _ZERO)

    @property
    def series_length(self):
        return 2

    def levels(self, x):
        return (x.k, x.s)

    def level_generator(self, level):
        return self.translation(_ONE) if level == 1 else self.dilation

    # affine structure
    @property
    def dilation(self) -> F1Elem:
        return F1Elem(1, _ZERO)

    def translation(self, t) -> F1Elem:
        t = to_rational(t)
        if not in_localization(t, self.m):
            raise ValueError(f"{t} is not in Z[1/{self.m}]")
        return F1Elem(0, t)

    @property
    def ring_base(self) -> int:
        return self.m

    def affine_parts(self, x):
        c = self.r ** x.k
        return c, c * x.s

    def phi(self, x) -> AffineMap:
        """The faithful representation ``b^k a^s -> (t -> r^k (t + s))``."""
        return AffineMap(*self.affine_parts(x))

    def split(self, level=1):
        if level != 1:
            raise ValueError("F1 has a single designated convex normal subgroup (level 1)")
        return Split(
            group=self,
            level=1,
            sub=RankOneGroup(self.m),
            quotient=IntegerGroup(),
            project=lambda x: x.k,
            lift=lambda k: F1Elem(k, _ZERO),
            embed=lambda s: F1Elem(0, s),
            sub_part=lambda x: x.s,
        )

    def elem_to_json(self, x):
        return {"k": -x.k if self.flipped else x.k, "s": format_rational(x.s)}

    def format_elem(self, x):
        k = -x.k if self.flipped else x.k
        return format_word([("b", k), ("a", x.s)])

    def descriptor(self):
        return {"family": "f1", "r": format_rational(self.r_given)}


# --------------------------------------------------------------------------
# towers


class TowerElem(NamedTuple):
    exps: Tuple[int, ...]


@dataclass(frozen=True)
class TowerGroup(Group):
    """Iterated Z-by-Z extensions: ``a_j a_i a_j^-1 = a_i^{sigma(i, j)}`` for i < j.

    ``signs`` holds the pairs with sigma = -1 as well as any explicit +1
    entries; missing pairs act trivially.
    """

    n: int
    signs: Tuple[Tuple[Tuple[int, int], int], ...] = ()
    _flip: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    family = "tower"
    divisible_generators = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDescriptorError("a tower needs at least one level")
        table = {}
        for (i, j), s in dict(self.signs).items():
            if not (1 <= i < j <= self.n):
                raise InvalidDescriptorError(f"bad tower index pair ({i},{j}) for n={self.n}")
            if s not in (1, -1):
                raise InvalidDescriptorError(f"tower signs must be +1 or -1, got {s}")
            table[(i, j)] = s
        object.__setattr__(self, "signs", tuple(sorted(table.items())))
        # _flip[i] lists the 0-based j > i whose generator inverts a_{i+1}
        flip = tuple(
            tuple(j - 1 for j in range(i + 2, self.n + 1) if table.get((i + 1, j), 1) == -1)
            for i in range(self.n)
        )
        object.__setattr__(self, "_flip", flip)

    @classmethod
    def from_signs(cls, n: int, signs: Dict[Tuple[int, int], int]) -> TowerGroup:
        return cls(n, tuple(signs.items()))

    @classmethod
    def klein(cls) -> TowerGroup:
        return cls(2, (((1, 2), -1),))

    @property
    def generator_names(self):
        return tuple(f"a{i}" for i in range(1, self.n + 1))

    def sigma(self, i: int, j: int) -> int:
        return dict(self.signs).get((i, j), 1)

    def identity(self):
        return TowerElem((0,) * self.n)

    def _factor(self, i, y):
        f = 1
        for j in self._flip[i]:
            if y[j] & 1:
                f = -f
        return f

    def mul(self, x, y):
        xe, ye = x.exps, y.exps
        return TowerElem(tuple(self._factor(i, ye) * xe[i] + ye[i] for i in range(self.n)))

    def inv(self, x):
        out = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            out[i] = -self._factor(i, out) * x.exps[i]
        return TowerElem(tuple(out))

    def contains(self, x):
        return isinstance(x, TowerElem) and len(x.exps) == self.n and all(isinstance(e, int) for e in x.exps)

    def elem(self, exps) -> TowerElem:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents")
        return TowerElem(exps)

    def gen_power(self, name, exp):
        i = int(name[1:]) - 1
        exps = [0] * self.n
        exps[i] = int(exp)
        return TowerElem(tuple(exps))

    @property
    def series_length(self):
        return self.n

    def levels(self, x):
        return tuple(reversed(x.exps))

    def level_generator(self, level):
        return self.gen_power(f"a{level}", 1)

    def split(self, level=1):
        if not 1 <= level < self.n:
            raise ValueError(f"tower split level must be in 1..{self.n - 1}")
        table = dict(self.signs)
        sub = TowerGroup(level, tuple((p, s) for p, s in table.items() if p[1] <= level))
        quotient = TowerGroup(
            self.n - level,
            tuple(((i - level, j - level), s) for (i, j), s in table.items() if i > level),
        )
        zeros_top = (0,) * (self.n - level)
        zeros_bottom = (0,) * level
        return Split(
            group=self,
            level=level,
            sub=sub,
            quotient=quotient,
            project=lambda x: TowerElem(x.exps[level:]),
            lift=lambda q: TowerElem(zeros_bottom + q.exps),
            embed=lambda h: TowerElem(h.exps + zeros_top),
            sub_part=lambda x: TowerElem(x.exps[:level]),
        )

    def elem_to_json(self, x):
        return {"exps": list(x.exps)}

    def format_elem(self, x):
        return format_word([(f"a{i + 1}", x.exps[i]) for i in range(self.n - 1, -1, -1)])

    def descriptor(self):
        return {
            "family": "tower",
            "n": self.n,
            "signs": {f"{i},{j}": s for (i, j), s in self.signs},
        }


# --------------------------------------------------------------------------
# B(1,3) and the G(n) family


class BS13Elem(NamedTuple):
    """``x -> 3^k x + shift``."""

    k: int
    shift: Fraction

    @property
    def map(self) -> AffineMap:
        return AffineMap(Fraction(3) ** self.k, self.shift)


_BS_ID = BS13Elem(0, _ZERO)


def _bs_mul(x: BS13Elem, y: BS13Elem) -> BS13Elem:
    if x.k >= 0:
        return BS13Elem(x.k + y.k, y.shift * 3 ** x.k + x.shift)
    return BS13Elem(x.k + y.k, y.shift / 3 ** (-x.k) + x.shift)


def _bs_inv(x: BS13Elem) -> BS13Elem:
    return BS13Elem(-x.k, -x.shift * Fraction(3) ** (-x.k))


@dataclass(frozen=True)
class BS13Group(Group):
    """B(1,3) = <beta, gamma | gamma beta gamma^-1 = beta^3> acting by
    beta: x -> x + 1, gamma: x -> 3x.  Words use ``b`` for beta and ``c`` for
    gamma, matching the images of the G(n) generators."""

    family = "bs13"
    generator_names = ("b", "c")
    divisible_generators = ("b",)

    def identity(self):
        return _BS_ID

    def mul(self, x, y):
        return _bs_mul(x, y)

    def inv(self, x):
        return _bs_inv(x)

    def contains(self, x):
        return isinstance(x, BS13Elem) and isinstance(x.k, int) and in_localization(x.shift, 3)

    def elem(self, k, shift) -> BS13Elem:
        shift = to_rational(shift)
        if not in_localization(shift, 3):
            raise ValueError(f"{shift} is not in Z[1/3]")
        return BS13Elem(int(k), shift)

    def gen_power(self, name, exp):
        if name == "b":
            return self.translation(to_rational(exp))
        return BS13Elem(int(exp), _ZERO)

    @property
    def series_length(self):
        return 2

    def levels(self, x):
        return (x.k, x.shift)

    def level_generator(self, level):
        return self.translation(_ONE) if level == 1 else self.dilation

    @property
    def dilation(self):
        return BS13Elem(1, _ZERO)

    def translation(self, t):
        t = to_rational(t)
        if not in_localization(t, 3):
            raise ValueError(f"{t} is not in Z[1/3]")
        return BS13Elem(0, t)

    @property
    def ring_base(self):
        return 3

    def affine_parts(self, x):
        return Fraction(3) ** x.k, x.shift

    def phi(self, x) -> AffineMap:
        return x.map

    def fixes(self, x, point) -> bool:
        return x.map(to_rational(point)) == point

    def elem_to_json(self, x):
        return {"k": x.k, "t": format_rational(x.shift)}

    def format_elem(self, x):
        return format_word([("b", x.shift), ("c", x.k)])

    def descriptor(self):
        return {"family": "bs13"}


def _parity(t: Fraction) -> int:
    # t in Z[1/3]: the parity of the reduced numerator is a homomorphism Z[1/3] -> Z/2
    return t.numerator & 1


def chi(g: BS13Elem, n: int) -> Fraction:
    """The action of G(n)/G_1 = B(1,3) on G_1: conjugation by ``g`` sends
    ``a^s`` to ``a^{chi(g) s}``.  chi(gamma) = n, chi(beta) = -1."""
    value = Fraction(n) ** g.k
    return -value if _parity(g.shift) else value


class GnElem(NamedTuple):
    s: Fraction
    g: BS13Elem


@dataclass(frozen=True)
class GnGroup(Group):
    """G(n) as Z[1/|n|] x| B(1,3), elements ``a^s * g``."""

    n: int
    m: int = field(init=False)

    family = "gn"
    generator_names = ("a", "b", "c")
    divisible_generators = ("a", "b")

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n == 0:
            raise InvalidDescriptorError(f"G(n) needs a nonzero integer n, got {self.n!r}")
        object.__setattr__(self, "m", abs(self.n))

    def _chi(self, g):
        if g.k == 0:
            return -1 if g.shift.numerator & 1 else 1
        return chi(g, self.n)

    def identity(self):
        return GnElem(_ZERO, _BS_ID)

    def mul(self, x, y):
        if y.s:
            s = x.s + self._chi(x.g) * y.s
        else:
            s = x.s
        return GnElem(s, _bs_mul(x.g, y.g))

    def inv(self, x):
        return GnElem(-x.s / self._chi(x.g), _bs_inv(x.g))

    def contains(self, x):
        return (
            isinstance(x, GnElem)
            and isinstance(x.s, (int, Fraction))
            and in_localization(x.s, self.m)
            and BS13Group().contains(x.g)
        )

    def elem(self, s, k=0, t=0) -> GnElem:
        s = to_rational(s)
        if not in_localization(s, self.m):
            raise ValueError(f"{s} is not in Z[1/{self.m}]")
        return GnElem(s, BS13Group().elem(k, t))

    def gen_power(self, name, exp):
        if name == "a":
            s = to_rational(exp)
            if not in_localization(s, self.m):
                raise ValueError(f"{s} is not in Z[1/{self.m}]")
            return GnElem(s, _BS_ID)
        if name == "b":
            return GnElem(_ZERO, BS13Group().translation(to_rational(exp)))
        return GnElem(_ZERO, BS13Elem(int(exp), _ZERO))

    @property
    def series_length(self):
        return 3

    def levels(self, x):
        return (x.g.k, x.g.shift, x.s)

    def level_generator(self, level):
        return self.gen_power("abc"[level - 1], 1)

    def split(self, level=1):
        if level != 1:
            raise ValueError("G(n) has a single designated convex normal subgroup (level 1)")
        return Split(
            group=self,
            level=1,
            sub=RankOneGroup(self.m),
            quotient=BS13Group(),
            project=lambda x: x.g,
            lift=lambda g: GnElem(_ZERO, g),
            embed=lambda s: GnElem(s, _BS_ID),
            sub_part=lambda x: x.s,
        )

    def elem_to_json(self, x):
        return {"s": format_rational(x.s), "k": x.g.k, "t": format_rational(x.g.shift)}

    def format_elem(self, x):
        return format_word([("a", x.s), ("b", x.g.shift), ("c", x.g.k)])

    def descriptor(self):
        return {"family": "gn", "n": self.n}


# --------------------------------------------------------------------------
# rank-one carriers


@dataclass(frozen=True)
class IntegerGroup(Group):
    """Z, written multiplicatively with generator ``b`` (the quotient F1/G_1)."""

    family = "z"
    generator_names = ("b",)

    def identity(self):
        return 0

    def mul(self, x, y):
        return x + y

    def inv(self, x):
        return -x

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def gen_power(self, name, exp):
        return int(exp)

    @property
    def series_length(self):
        return 1

    def levels(self, x):
        return (x,)

    def level_generator(self, level):
        return 1

    def elem_to_json(self, x):
        return {"k": x}

    def format_elem(self, x):
        return format_word([("b", x)])

    def descriptor(self):
        return {"family": "z"}


@dataclass(frozen=True)
class RankOneGroup(Group):
    """The additive group Z[1/m] with generator ``a`` = 1 (m = 1 gives Z)."""

    m: int = 1

    family = "rank1"
    generator_names = ("a",)
    divisible_generators = ("a",)

    def identity(self):
        return _ZERO

    def mul(self, x, y):
        return x + y

    def inv(self, x):
        return -x

    def contains(self, x):
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool) and in_localization(x, self.m)

    def gen_power(self, name, exp):
        s = to_rational(exp)
        if not in_localization(s, self.m):
            raise ValueError(f"{s} is not in Z[1/{self.m}]")
        return s

    @property
    def series_length(self):
        return 1

    def levels(self, x):
        return (x,)

    def level_generator(self, level):
        return _ONE

    def elem_to_json(self, x):
        return {"s": format_rational(x)}

    def format_elem(self, x):
        return format_word([("a", x)])

    def descriptor(self):
        return {"family": "rank1", "m": self.m}


# --------------------------------------------------------------------------
# descriptors


def _pair_key(key: str) -> Tuple[int, int]:
    try:
        i, j = (int(p) for p in str(key).split(","))
    except ValueError:
        raise InvalidDescriptorError(f"bad index pair {key!r}; expected 'i,j'") from None
    return i, j


def group_from_json(data) -> Group:
    """Build a group from ``{"family": "f1", "r": "3/2"}`` and friends."""
    if not isinstance(data, dict) or "family" not in data:
        raise InvalidDescriptorError(f"group descriptor needs a 'family': {data!r}")
    family = str(data["family"]).lower()
    try:
        if family == "f1":
            return F1Group(to_rational(str(data["r"])))
        if family == "tower":
            signs = {_pair_key(k): int(v) for k, v in dict(data.get("signs", {})).items()}
            n = data.get("n")
            if n is None:
                n = max((j for _, j in signs), default=1)
            return TowerGroup.from_signs(int(n), signs)
        if family == "gn":
            n = data["n"]
            if isinstance(n, str):
                n = int(n)
            return GnGroup(n)
        if family == "bs13":
            return BS13Group()
        if family == "z":
            return IntegerGroup()
        if family == "rank1":
            return RankOneGroup(int(data.get("m", 1)))
    except KeyError as exc:
        raise InvalidDescriptorError(f"group descriptor for {family!r} is missing {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InvalidDescriptorError):
            raise
        raise InvalidDescriptorError(f"bad {family!r} group descriptor: {exc}") from None
    raise InvalidDescriptorError(f"unknown group family {family!r}")


# --------------------------------------------------------------------------
# balls


@dataclass(frozen=True)
class Ball:
    """Elements of word length <= radius, each with its minimal length and a
    canonical minimal word (lexicographically least in generator order
    a, a^-1, b, b^-1, ...).  ``elements`` is in ball order: by length, then
    by printed word."""

    group: Group
    radius: int
    elements: Tuple
    lengths: Dict
    words: Dict

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.lengths

    def length(self, x) -> int:
        return self.lengths[x]

    def word(self, x) -> str:
        return self.words[x]

    def within(self, radius: int) -> List:
        return [x for x in self.elements if self.lengths[x] <= radius]

    def sphere(self, radius: int) -> List:
        return [x for x in self.elements if self.lengths[x] == radius]


@functools.lru_cache(maxsize=64)
def _enumerate_ball(group: Group, radius: int, cap: int) -> Ball:
    gens = group.symmetric_generators()
    images = [group.gen_power(name, e) for name, e in gens]
    ident = group.identity()
    tokens = {ident: ()}
    lengths = {ident: 0}
    frontier = [ident]
    for length in range(1, radius + 1):
        nxt = []
        # frontier is sorted by token tuple, so the first discovery of an
        # element is its lexicographically least minimal word
        for x in frontier:
            base = tokens[x]
            for idx, img in enumerate(images):
                y = group.mul(x, img)
                if y not in lengths:
                    lengths[y] = length
                    tokens[y] = base + (idx,)
                    nxt.append(y)
                    if len(lengths) > cap:
                        raise BallCapError(
                            f"ball of radius {radius} exceeds the cap of {cap} elements "
                            f"(set ORDSPACE_BALL_CAP to raise it)"
                        )
        frontier = nxt
    words = {x: format_word([gens[i] for i in t]) for x, t in tokens.items()}
    order = sorted(lengths, key=lambda x: (lengths[x], words[x]))
    return Ball(group, radius, tuple(order), lengths, words)


def ball(group: Group, radius: int, cap: Optional[int] = None) -> Ball:
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return _enumerate_ball(group, radius, ball_cap() if cap is None else cap)


# --------------------------------------------------------------------------
# subgroup membership


def member_G1(group: Group, x) -> bool:
    """Membership in the bottom term G_1 of the series."""
    if isinstance(group, F1Group):
        return x.k == 0
    if isinstance(group, GnGroup):
        return x.g == _BS_ID
    return group.in_level(x, 1)


def member_Hnk(group: GnGroup, k: int, x: GnElem) -> bool:
    """Membership in H(n, k) = <a, c b^k>: the B(1,3) part fixes -3k/2."""
    point = Fraction(-3 * k, 2)
    return x.g.map(point) == point
