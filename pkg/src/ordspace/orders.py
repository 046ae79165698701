"""Left-orderings as sign oracles, their constructors and exhaustive checkers.

An ordering is represented by its positive cone: ``sign(x)`` is +1, 0 or -1
and ``x < y`` iff ``x^-1 y`` is positive.  Checkers work on finite balls and
return :class:`~ordspace.report.Report` objects.
"""
from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence

from .errors import (
    InvalidDescriptorError,
    LengthMismatchError,
    NonConvexSubgroupError,
    UnsupportedFamilyError,
    WrongGroupError,
)
from .exact import OrderParam, Side, sign_of, to_rational
from .groups import BS13Group, F1Group, GnGroup, Group, Split, ball, group_from_json, member_Hnk
from .report import Report, Violation

DEFAULT_RADIUS = 5
DEFAULT_EXP_BOUND = 64
CONVEXITY_RADIUS = 4

NEGATIVE, ZERO, POSITIVE = -1, 0, 1
SIGN_NAMES = {NEGATIVE: "negative", ZERO: "zero", POSITIVE: "positive"}
CMP_NAMES = {-1: "less", 0: "equal", 1: "greater"}


class Ordering:
    """Base class.  Subclasses implement ``_sign`` for elements of ``group``."""

    kind = "?"

    def __init__(self, group: Group):
        self.group = group

    def _sign(self, x) -> int:
        raise NotImplementedError

    def sign(self, x) -> int:
        if not self.group.contains(x):
            raise WrongGroupError(f"{x!r} is not an element of {self.group.descriptor()}")
        return self._sign(x)

    def is_positive(self, x) -> bool:
        return self.sign(x) == POSITIVE

    def compare(self, x, y) -> int:
        """-1 if x < y, 0 if equal, 1 if x > y."""
        if x == y:
            return 0
        return -self.sign(self.group.mul(self.group.inv(x), y))

    def sort(self, elements: Iterable) -> list:
        return sorted(elements, key=functools.cmp_to_key(self.compare))

    def descriptor(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor()}>"


class LexOrdering(Ordering):
    """Lexicographic ordering along the designated series: the sign of the
    highest nonzero coordinate times that level's chosen sign.  ``signs`` is
    listed top level first."""

    def __init__(self, group: Group, signs: Sequence[int], kind: str = "conrad"):
        super().__init__(group)
        signs = tuple(int(s) for s in signs)
        if len(signs) != group.series_length:
            raise LengthMismatchError(
                f"{group.family} has a series of length {group.series_length}, got {len(signs)} signs"
            )
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +1 or -1, got {signs}")
        self.signs = signs
        self.kind = kind

    def _sign(self, x):
        for coord, s in zip(self.group.levels(x), self.signs):
            if coord:
                return s if coord > 0 else -s
        return ZERO

    def descriptor(self):
        return {"kind": self.kind, "signs": list(self.signs)}


class SmirnovOrdering(Ordering):
    """Positive cone ``{g : phi(g)(eps) > eps}`` for an affine action, where an
    element fixing ``eps`` is resolved by the side of ``eps``: on the Above side
    it is positive iff its slope exceeds 1, on the Below side iff its slope is
    below 1."""

    kind = "smirnov"

    def __init__(self, group: Group, param: OrderParam):
        if not hasattr(group, "affine_parts"):
            raise UnsupportedFamilyError(f"Smirnov orderings need an affine family, not {group.family}")
        super().__init__(group)
        self.param = param

    def _sign(self, x):
        slope, shift = self.group.affine_parts(x)
        if slope == 1:
            return sign_of(shift)
        # phi(x)(e) - e = (slope - 1)(e - fixed point)
        fixed = shift / (1 - slope)
        return self.param.compare(fixed) if slope > 1 else -self.param.compare(fixed)

    def descriptor(self):
        return {"kind": "smirnov", "eps": self.param.to_json()}


class ReverseOrdering(Ordering):
    kind = "reverse"

    def __init__(self, inner: Ordering):
        super().__init__(inner.group)
        self.inner = inner

    def _sign(self, x):
        return self.inner._sign(self.group.inv(x))

    def descriptor(self):
        return {"kind": "reverse", "of": self.inner.descriptor()}


class ExtensionOrdering(Ordering):
    """Lexicographic gluing: positive iff the image in the quotient is positive,
    or the image is trivial and the element is positive in the subgroup."""

    kind = "extension"

    def __init__(self, split: Split, quotient: Ordering, sub: Ordering):
        if quotient.group != split.quotient:
            raise WrongGroupError("quotient ordering lives on the wrong group")
        if sub.group != split.sub:
            raise WrongGroupError("subgroup ordering lives on the wrong group")
        super().__init__(split.group)
        self.split = split
        self.quotient = quotient
        self.sub = sub

    def _sign(self, x):
        s = self.quotient._sign(self.split.project(x))
        if s:
            return s
        return self.sub._sign(self.split.sub_part(x))

    def descriptor(self):
        out = {"kind": "extension", "quotient": self.quotient.descriptor(), "sub": self.sub.descriptor()}
        if self.split.level != 1:
            out["level"] = self.split.level
        return out


class QuotientOrdering(Ordering):
    """Ordering induced on G/C by an ordering of G in which C is convex."""

    kind = "quotient"

    def __init__(self, parent: Ordering, split: Split):
        super().__init__(split.quotient)
        self.parent = parent
        self.split = split

    def _sign(self, q):
        return self.parent._sign(self.split.lift(q))

    def descriptor(self):
        return {
            "kind": "quotient",
            "group": self.parent.group.descriptor(),
            "of": self.parent.descriptor(),
            "level": self.split.level,
        }


class RestrictedOrdering(Ordering):
    kind = "restrict"

    def __init__(self, parent: Ordering, split: Split):
        super().__init__(split.sub)
        self.parent = parent
        self.split = split

    def _sign(self, h):
        return self.parent._sign(self.split.embed(h))

    def descriptor(self):
        return {
            "kind": "restrict",
            "group": self.parent.group.descriptor(),
            "of": self.parent.descriptor(),
            "level": self.split.level,
        }


# --------------------------------------------------------------------------
# constructors


def make_smirnov(group: Group, param: OrderParam) -> SmirnovOrdering:
    if not isinstance(group, (F1Group, BS13Group)):
        raise UnsupportedFamilyError(f"Smirnov orderings are defined on F1 and B(1,3), not {group.family}")
    return SmirnovOrdering(group, param)


def make_conrad_lex(group: Group, signs: Sequence[int]) -> LexOrdering:
    return LexOrdering(group, signs, "conrad")


def make_tararin_lex(group: Group, signs: Sequence[int]) -> LexOrdering:
    return LexOrdering(group, signs, "tararin")


def make_reverse(oracle: Ordering) -> Ordering:
    return ReverseOrdering(oracle)


def make_extension(group: Group, quotient: Ordering, sub: Ordering, level: int = 1) -> ExtensionOrdering:
    return ExtensionOrdering(group.split(level), quotient, sub)


def restrict(oracle: Ordering, level: int = 1) -> RestrictedOrdering:
    return RestrictedOrdering(oracle, oracle.group.split(level))


def quotient_order(oracle: Ordering, level: int = 1, radius: int = CONVEXITY_RADIUS) -> QuotientOrdering:
    """Induced ordering on G/C; C must be convex, which is checked on ball(radius)."""
    split = oracle.group.split(level)
    b = ball(oracle.group, radius)
    witness = convexity_violation(oracle, list(b), split.in_sub)
    if witness is not None:
        x, g, y = witness
        raise NonConvexSubgroupError(
            f"level-{level} subgroup is not convex within ball({radius}): "
            f"{b.word(x)} <= {b.word(g)} <= {b.word(y)}",
            witness,
        )
    return QuotientOrdering(oracle, split)


def gn_section_ordering(group: GnGroup, k: int, side: Side = Side.ABOVE) -> ExtensionOrdering:
    """The G(n) ordering making H(n, k) = <a, c b^k> convex: the Smirnov ordering
    of B(1,3) at -3k/2 (the fixed point of gamma beta^k), extended by the
    positive ordering of G_1."""
    split = group.split(1)
    quotient = SmirnovOrdering(split.quotient, OrderParam.finite(Fraction(-3 * k, 2), side))
    return ExtensionOrdering(split, quotient, LexOrdering(split.sub, (1,)))


def affine_to_param(alpha, beta, r) -> Fraction:
    """Base point ``beta / ((r - 1) alpha)`` of the ordering induced by the
    representation a -> x + alpha, b -> r x + beta."""
    alpha, beta, r = to_rational(alpha), to_rational(beta), to_rational(r)
    if alpha == 0 or r == 1:
        raise ZeroDivisionError("need alpha != 0 and r != 1")
    return beta / ((r - 1) * alpha)


def ordering_from_json(group: Group, data) -> Ordering:
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidDescriptorError(f"ordering descriptor needs a 'kind': {data!r}")
    kind = str(data["kind"]).lower()
    try:
        if kind in ("conrad", "tararin"):
            return LexOrdering(group, list(data["signs"]), kind)
        if kind == "smirnov":
            return make_smirnov(group, OrderParam.from_json(data["eps"]))
        if kind == "reverse":
            return ReverseOrdering(ordering_from_json(group, data["of"]))
        if kind == "extension":
            split = group.split(int(data.get("level", 1)))
            return ExtensionOrdering(
                split,
                ordering_from_json(split.quotient, data["quotient"]),
                ordering_from_json(split.sub, data["sub"]),
            )
        if kind in ("quotient", "restrict"):
            parent_group = group_from_json(data["group"])
            parent = ordering_from_json(parent_group, data["of"])
            level = int(data.get("level", 1))
            result = quotient_order(parent, level) if kind == "quotient" else restrict(parent, level)
            if result.group != group:
                raise WrongGroupError("induced ordering does not live on the requested group")
            return result
    except KeyError as exc:
        raise InvalidDescriptorError(f"{kind!r} ordering descriptor is missing {exc}") from None
    raise InvalidDescriptorError(f"unknown ordering kind {kind!r}")


# --------------------------------------------------------------------------
# checkers


def _word(b, group, x) -> str:
    return b.word(x) if x in b else group.format_elem(x)


def check_cone_axioms(oracle: Ordering, radius: int = DEFAULT_RADIUS) -> Report:
    """Trichotomy and semigroup closure of the positive cone on ball(radius).
    Stops at the first violation."""
    group = oracle.group
    b = ball(group, radius)
    report = Report("cone_axioms", details={"radius": radius})
    ident = group.identity()
    positives = []
    for x in b:
        s = oracle.sign(x)
        report.checked += 1
        if x == ident:
            if s != ZERO:
                report.add(Violation("identity", (x,), (b.word(x),), "identity is not neutral"))
                return report
            continue
        if s == ZERO:
            report.add(Violation("totality", (x,), (b.word(x),), "nontrivial element has sign zero"))
            return report
        if oracle.sign(group.inv(x)) != -s:
            report.add(Violation("inverse", (x,), (b.word(x),), "sign(x^-1) != -sign(x)"))
            return report
        if s == POSITIVE:
            positives.append(x)
    for x in positives:
        for y in positives:
            report.checked += 1
            if oracle._sign(group.mul(x, y)) != POSITIVE:
                report.add(
                    Violation("closure", (x, y), (b.word(x), b.word(y)), "product of positives is not positive")
                )
                return report
    return report


def conradian_violations(oracle: Ordering, elements: Sequence) -> List[tuple]:
    """Pairs (f, g) of positive elements with ``f g^2 <= g``."""
    group = oracle.group
    positives = [x for x in elements if oracle.sign(x) == POSITIVE]
    prepared = [(g, group.inv(g), group.mul(g, g)) for g in positives]
    bad = []
    for f in positives:
        for g, g_inv, g_sq in prepared:
            if oracle._sign(group.mul(group.mul(g_inv, f), g_sq)) != POSITIVE:
                bad.append((f, g))
    return bad


def check_conradian(oracle: Ordering, radius: int = 4) -> Report:
    """Exhaustively test ``f > id, g > id  =>  f g^2 > g`` over ball(radius).
    Products outside the ball are evaluated directly (oracles are total)."""
    b = ball(oracle.group, radius)
    report = Report("conradian", details={"radius": radius})
    positives = sum(1 for x in b if oracle.sign(x) == POSITIVE)
    report.checked = positives * positives
    bad = conradian_violations(oracle, list(b))
    bad.sort(key=lambda p: (b.length(p[0]) + b.length(p[1]), b.word(p[0]), b.word(p[1])))
    for f, g in bad:
        report.add(Violation("conrad", (f, g), (b.word(f), b.word(g)), "f g^2 <= g"))
    return report


def convexity_violation(oracle: Ordering, elements: Sequence, member: Callable) -> Optional[tuple]:
    """Relative convexity of ``{x in elements : member(x)}`` within ``elements``.

    Returns None, or a triple (x, g, y) with x <= g <= y, x and y members and g
    not a member.
    """
    ordered = oracle.sort(elements)
    flags = [bool(member(x)) for x in ordered]
    idx = [i for i, f in enumerate(flags) if f]
    if not idx:
        return None
    lo, hi = idx[0], idx[-1]
    for i in range(lo, hi + 1):
        if not flags[i]:
            left = max(j for j in idx if j < i)
            right = min(j for j in idx if j > i)
            return ordered[left], ordered[i], ordered[right]
    return None


def check_convex(oracle: Ordering, member: Callable, radius: int = DEFAULT_RADIUS, name: str = "subgroup") -> Report:
    b = ball(oracle.group, radius)
    report = Report("convexity", checked=len(b), details={"radius": radius, "subgroup": name})
    witness = convexity_violation(oracle, list(b), member)
    if witness is not None:
        report.add(Violation("convexity", witness, tuple(b.word(x) for x in witness), "x <= g <= y with g outside"))
    return report


def a_bounds(oracle: Ordering, x, exp_bound: int = DEFAULT_EXP_BOUND):
    """Exponents (n1, n2) of least absolute value with ``a^n1 < x < a^n2``,
    where ``a`` generates the bottom of the series; None where the search up
    to ``exp_bound`` is exhausted."""
    group = oracle.group
    a = group.level_generator(1)
    n1 = n2 = None
    for n in sorted(range(-exp_bound, exp_bound + 1), key=lambda n: (abs(n), n)):
        p = group.power(a, n)
        c = oracle.compare(p, x)
        if c < 0 and n1 is None:
            n1 = n
        elif c > 0 and n2 is None:
            n2 = n
        if n1 is not None and n2 is not None:
            break
    return n1, n2


def check_cofinal(oracle: Ordering, radius: int = DEFAULT_RADIUS, exp_bound: int = DEFAULT_EXP_BOUND) -> Report:
    """For each element of ball(radius), look for ``a^n1 < g < a^n2`` with
    ``|n1|, |n2| <= exp_bound``.  An element with no such bracket up to the
    bound is reported as ``exhausted``, never as proven unbounded."""
    group = oracle.group
    b = ball(group, radius)
    report = Report("cofinal", details={"radius": radius, "exp_bound": exp_bound})
    entries = []
    for x in b:
        n1, n2 = a_bounds(oracle, x, exp_bound)
        report.checked += 1
        found = n1 is not None and n2 is not None
        entries.append({"word": b.word(x), "status": "found" if found else "exhausted", "n1": n1, "n2": n2})
        if not found:
            report.add(Violation("exhausted", (x,), (b.word(x),), f"no bracketing power of a within |n| <= {exp_bound}"))
    report.details["elements"] = entries
    return report


def all_lex(group: Group, kind: str = "conrad") -> List[LexOrdering]:
    return [LexOrdering(group, signs, kind) for signs in itertools.product((1, -1), repeat=group.series_length)]


def first_disagreement(o1: Ordering, o2: Ordering, elements: Iterable):
    for x in elements:
        if o1._sign(x) != o2._sign(x):
            return x
    return None


def hnk_member(group: GnGroup, k: int) -> Callable:
    return lambda x: member_Hnk(group, k, x)
