"""Counting and classification for split rational series.

A series ``{id} = G_0 < G_1 < ... < G_n = G`` is described by the scalars by
which a generator of level j acts on level i < j.  Missing scalars mean a
trivial action (scalar 1).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .errors import InfiniteFamilyError, InvalidDescriptorError
from .exact import format_rational, to_rational
from .groups import BS13Group, F1Group, GnGroup, Group, IntegerGroup, RankOneGroup, TowerGroup
from .orders import LexOrdering, all_lex
from .report import Report, Violation

INFINITE = math.inf
Count = Union[int, float]


class Verdict(str, enum.Enum):
    TARARIN = "tararin"
    FINITE_C_NO_ISOLATED = "finite_c_no_isolated"
    INFINITE_C = "infinite_c"


@dataclass(frozen=True)
class SeriesDescriptor:
    n: int
    scalars: Tuple[Tuple[Tuple[int, int], Fraction], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidDescriptorError("a rational series has length at least 1")
        table = {}
        for (i, j), v in dict(self.scalars).items():
            if not 1 <= i < j <= self.n:
                raise InvalidDescriptorError(f"scalar index ({i},{j}) out of range for n={self.n}")
            v = to_rational(v)
            if v == 0:
                raise InvalidDescriptorError(f"scalar ({i},{j}) must be nonzero")
            table[(i, j)] = v
        object.__setattr__(self, "scalars", tuple(sorted(table.items())))

    @classmethod
    def from_mapping(cls, n: int, scalars: Dict[Tuple[int, int], object]) -> SeriesDescriptor:
        return cls(n, tuple((k, to_rational(v)) for k, v in scalars.items()))

    @classmethod
    def consecutive(cls, values) -> SeriesDescriptor:
        """``[s_12, s_23, ...]``: consecutive scalars only."""
        values = [to_rational(v) for v in values]
        return cls(len(values) + 1, tuple(((i + 1, i + 2), v) for i, v in enumerate(values)))

    def scalar(self, i: int, j: int) -> Fraction:
        return dict(self.scalars).get((i, j), Fraction(1))

    def consecutive_scalars(self) -> List[Fraction]:
        return [self.scalar(i, i + 1) for i in range(1, self.n)]

    def to_json(self):
        return {"n": self.n, "scalars": {f"{i},{j}": format_rational(v) for (i, j), v in self.scalars}}


def series_from_json(data) -> SeriesDescriptor:
    if isinstance(data, list):
        return SeriesDescriptor.consecutive([str(v) for v in data])
    if not isinstance(data, dict) or "n" not in data:
        raise InvalidDescriptorError(f"series descriptor needs 'n' and 'scalars': {data!r}")
    scalars = {}
    for key, v in dict(data.get("scalars", {})).items():
        try:
            i, j = (int(p) for p in str(key).split(","))
        except ValueError:
            raise InvalidDescriptorError(f"bad index pair {key!r}") from None
        scalars[(i, j)] = to_rational(str(v))
    return SeriesDescriptor.from_mapping(int(data["n"]), scalars)


def series_of(group: Group) -> SeriesDescriptor:
    """The series descriptor of a concrete family."""
    if isinstance(group, F1Group):
        return SeriesDescriptor.consecutive([group.r_given])
    if isinstance(group, BS13Group):
        return SeriesDescriptor.consecutive([3])
    if isinstance(group, GnGroup):
        return SeriesDescriptor.from_mapping(3, {(1, 2): -1, (2, 3): 3, (1, 3): group.n})
    if isinstance(group, TowerGroup):
        return SeriesDescriptor.from_mapping(group.n, {p: s for p, s in group.signs})
    if isinstance(group, (IntegerGroup, RankOneGroup)):
        return SeriesDescriptor(1)
    raise InvalidDescriptorError(f"no series descriptor for {group.family}")


def validate_series(d: SeriesDescriptor) -> Report:
    """A level acted on nontrivially from above can only be acted on by +-1
    from below: for i < j < k, scalar(j,k) != 1 forces scalar(i,j) = +-1."""
    report = Report("series")
    for i in range(1, d.n + 1):
        for j in range(i + 1, d.n + 1):
            for k in range(j + 1, d.n + 1):
                report.checked += 1
                outer, inner = d.scalar(j, k), d.scalar(i, j)
                if outer != 1 and inner not in (1, -1):
                    report.add(
                        Violation(
                            "character",
                            (i, j, k),
                            (str(i), str(j), str(k)),
                            f"scalar({i},{j}) = {inner} is not +-1 while scalar({j},{k}) = {outer} != 1; "
                            f"no group with finitely many C-orderings has such a series",
                        )
                    )
                    report.details["triple"] = [i, j, k]
                    return report
    return report


def _require_valid(d: SeriesDescriptor) -> None:
    report = validate_series(d)
    if not report.ok:
        raise InvalidDescriptorError(report.violations[0].message)


def count_c_orderings(d: SeriesDescriptor) -> Count:
    """2^n when no quotient G_{i+2}/G_i is Abelian, otherwise infinitely many."""
    _require_valid(d)
    if all(s != 1 for s in d.consecutive_scalars()):
        return 2 ** d.n
    return INFINITE


def count_left_orderings(d: SeriesDescriptor) -> Count:
    """2^n when no quotient G_{i+2}/G_i is bi-orderable; a length-two quotient
    is bi-orderable exactly when its scalar is positive."""
    _require_valid(d)
    if all(s < 0 for s in d.consecutive_scalars()):
        return 2 ** d.n
    return INFINITE


def verdict(d: SeriesDescriptor) -> Verdict:
    if count_left_orderings(d) != INFINITE:
        return Verdict.TARARIN
    if count_c_orderings(d) != INFINITE:
        return Verdict.FINITE_C_NO_ISOLATED
    return Verdict.INFINITE_C


def _failing_quotient(d: SeriesDescriptor, bad) -> str:
    for i, s in enumerate(d.consecutive_scalars()):
        if bad(s):
            return f"G_{i + 2}/G_{i} (scalar {format_rational(s)})"
    return "?"


def enum_orderings(group: Group, kind: str) -> List[LexOrdering]:
    """All 2^n lexicographic orderings when the relevant count is finite."""
    d = series_of(group)
    if kind == "left":
        if count_left_orderings(d) == INFINITE:
            raise InfiniteFamilyError(
                f"{group.family} has infinitely many left-orderings: "
                f"{_failing_quotient(d, lambda s: s > 0)} is bi-orderable"
            )
        return all_lex(group, "tararin")
    if kind == "conradian":
        if count_c_orderings(d) == INFINITE:
            raise InfiniteFamilyError(
                f"{group.family} has infinitely many C-orderings: "
                f"{_failing_quotient(d, lambda s: s == 1)} is Abelian"
            )
        return all_lex(group, "conrad")
    raise ValueError(f"kind must be 'left' or 'conradian', got {kind!r}")


def count_to_json(c: Count):
    return "infinite" if c == INFINITE else int(c)
