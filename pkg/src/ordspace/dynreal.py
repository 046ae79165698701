"""Dynamical realization of an ordering on a finite enumerated segment.

Each new element is placed at max+1, min-1 or the midpoint of its two order
neighbours, so all coordinates are exact dyadic rationals.  Only the
finitely many realized points are constructed; no interpolation to a
homeomorphism of the line is attempted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DuplicateElementError, WrongGroupError
from .groups import ball
from .orders import Ordering
from .report import Report, Violation


@dataclass
class RealizationMap:
    group: object
    entries: List[Tuple[object, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        self.coords: Dict[object, Fraction] = dict(self.entries)

    def __getitem__(self, x) -> Fraction:
        return self.coords[x]

    def __contains__(self, x) -> bool:
        return x in self.coords

    def __len__(self):
        return len(self.entries)

    def coordinates(self) -> List[Fraction]:
        return [t for _, t in self.entries]


def ball_enumeration(group, radius: int) -> list:
    """Ball order: by minimal word length, then by printed word."""
    return list(ball(group, radius))


def realize(oracle: Ordering, enumeration: Sequence, n: Optional[int] = None) -> RealizationMap:
    """Assign coordinates to the first ``n`` elements of ``enumeration``
    (all of them by default).  The enumeration must start at the identity."""
    group = oracle.group
    items = list(enumeration if n is None else enumeration[:n])
    if not items or items[0] != group.identity():
        raise ValueError("the enumeration must begin with the identity")
    seen = set()
    for x in items:
        if not group.contains(x):
            raise WrongGroupError(f"{x!r} is not in {group.descriptor()}")
        if x in seen:
            raise DuplicateElementError(f"{group.format_elem(x)} occurs twice in the enumeration")
        seen.add(x)

    ordered = [items[0]]  # realized elements sorted by the ordering
    coords = {items[0]: Fraction(0)}
    entries = [(items[0], Fraction(0))]
    for x in items[1:]:
        lo, hi = 0, len(ordered)
        while lo < hi:
            mid = (lo + hi) // 2
            if oracle.compare(ordered[mid], x) < 0:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(ordered):
            t = coords[ordered[-1]] + 1
        elif lo == 0:
            t = coords[ordered[0]] - 1
        else:
            t = (coords[ordered[lo - 1]] + coords[ordered[lo]]) / 2
        ordered.insert(lo, x)
        coords[x] = t
        entries.append((x, t))
    return RealizationMap(group, entries)


def check_realization(rmap: RealizationMap, oracle: Ordering) -> Report:
    """Three checks on the realized points:

    * order preservation: ``x < y`` iff ``t(x) < t(y)`` for every pair;
    * partial equivariance: for each realized g the partial map
      ``t(h) -> t(gh)`` (over h with gh realized) is strictly increasing;
    * sign recovery: ``sign(g)`` equals the sign of ``t(g) - t(id)``.
    """
    group = oracle.group
    if rmap.group != group:
        raise WrongGroupError("realization and ordering live on different groups")
    report = Report("realization")
    fmt = group.format_elem
    elems = [x for x, _ in rmap.entries]
    results = {"order": True, "equivariance": True, "sign": True}

    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            report.checked += 1
            c = oracle.compare(x, y)
            tc = (rmap[x] > rmap[y]) - (rmap[x] < rmap[y])
            if c != tc:
                results["order"] = False
                report.add(Violation("order", (x, y), (fmt(x), fmt(y)), "coordinate order disagrees with the ordering"))

    for g in elems:
        pairs = sorted((rmap[h], rmap[gh]) for h in elems if (gh := group.mul(g, h)) in rmap)
        report.checked += len(pairs)
        for (s0, t0), (s1, t1) in zip(pairs, pairs[1:]):
            if not t0 < t1:
                results["equivariance"] = False
                report.add(
                    Violation("equivariance", (g,), (fmt(g),), f"t(h) -> t(gh) not increasing at {s0} < {s1}")
                )
                break

    origin = rmap[group.identity()]
    for g in elems:
        report.checked += 1
        t_sign = (rmap[g] > origin) - (rmap[g] < origin)
        if oracle.sign(g) != t_sign:
            results["sign"] = False
            report.add(Violation("sign", (g,), (fmt(g),), "sign not recovered from t(g)"))

    report.details["checks"] = results
    return report
