"""The space of left-orderings at desk scale.

Distances use the exhaustion of a group by minimal-word-length balls, so
every number reported here is relative to the fixed generating set of the
family.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import ProbeError, UnsupportedFamilyError, WrongGroupError
from .exact import MINUS_INFINITY, PLUS_INFINITY, OrderParam, Side, format_rational
from .groups import BS13Group, F1Group, GnGroup, Group, IntegerGroup, RankOneGroup, TowerGroup, ball
from .orders import (
    POSITIVE,
    ExtensionOrdering,
    LexOrdering,
    Ordering,
    ReverseOrdering,
    SmirnovOrdering,
    all_lex,
    first_disagreement,
)

WITNESS_DENOMINATOR_POWER = 6
WITNESS_EXPONENT_BOUND = 64
_FINITE_SEARCH_RADIUS = 3


@dataclass(frozen=True)
class AgreementResult:
    """``radius`` is the first n where the orderings differ on ball(n) when
    ``exact``; otherwise they agree on ball(radius) and the true value is at
    least that."""

    radius: int
    exact: bool
    witness: object = None
    word: Optional[str] = None

    @property
    def sort_key(self) -> int:
        return self.radius if self.exact else self.radius + 1

    def to_json(self):
        return {
            "agreement_radius": self.radius if self.exact else f">={self.radius}",
            "witness": self.word,
        }


@dataclass(frozen=True)
class Distance:
    value: Fraction
    exact: bool

    def __str__(self):
        return format_rational(self.value) if self.exact else f"<={format_rational(self.value)}"


def _same_group(o1: Ordering, o2: Ordering) -> Group:
    if o1.group != o2.group:
        raise WrongGroupError("orderings live on different groups")
    return o1.group


def agreement_radius(o1: Ordering, o2: Ordering, max_radius: int) -> AgreementResult:
    """Smallest n <= max_radius such that the two orderings differ on ball(n).

    Disagreements come in inverse pairs; the reported witness is the one
    positive for ``o1``, ties broken by the printed word.
    """
    group = _same_group(o1, o2)
    b = ball(group, max_radius)
    best = None
    for x in b:
        length = b.length(x)
        if best is not None and length > best[0]:
            break
        s1 = o1._sign(x)
        if s1 != o2._sign(x):
            key = (length, s1 != POSITIVE, b.word(x))
            if best is None or key < best:
                best = key + (x,)
    if best is None:
        return AgreementResult(max_radius, False)
    return AgreementResult(best[0], True, best[3], best[2])


def dist(o1: Ordering, o2: Ordering, max_radius: int) -> Distance:
    result = agreement_radius(o1, o2, max_radius)
    return Distance(Fraction(1, 2 ** result.radius), result.exact)


def converge_experiment(
    group: Group, params: Sequence[OrderParam], target: Ordering, max_radius: int
) -> List[tuple]:
    """Agreement radius between each Smirnov ordering in ``params`` and ``target``."""
    if not isinstance(group, F1Group):
        raise UnsupportedFamilyError("convergence experiments run on F1")
    if not isinstance(target, LexOrdering) or target.group != group:
        raise WrongGroupError("the target must be a lexicographic Conradian ordering on the same group")
    return [(p, agreement_radius(SmirnovOrdering(group, p), target, max_radius)) for p in params]


# --------------------------------------------------------------------------
# neighbourhood probe


@dataclass(frozen=True)
class ProbeResult:
    isolated: bool
    oracle: Optional[Ordering] = None
    witness: object = None
    note: str = ""

    def to_json(self, group: Group):
        if self.isolated:
            return {"isolated": True, "note": self.note}
        return {
            "isolated": False,
            "ordering": self.oracle.descriptor(),
            "witness": group.format_elem(self.witness),
        }


ISOLATED = ProbeResult(True, note="every ordering of this group satisfying the constraints equals the given one")


def _between(lo: Optional[Fraction], hi: Optional[Fraction], m: int) -> Fraction:
    """An element of Z[1/m] strictly between lo and hi (None = unbounded),
    with the smallest possible denominator power, then the least such."""
    if hi is None:
        return Fraction(math.floor(lo) + 1)
    if lo is None:
        return Fraction(math.ceil(hi) - 1)
    for d in range(WITNESS_DENOMINATOR_POWER + 1):
        scale = m ** d
        t = Fraction(math.floor(lo * scale) + 1, scale)
        if t < hi:
            return t
    raise ProbeError(
        f"no translation in Z[1/{m}] with denominator <= {m}^{WITNESS_DENOMINATOR_POWER} "
        f"lies strictly between {lo} and {hi}"
    )


def _fixes(group, x, point) -> bool:
    slope, shift = group.affine_parts(x)
    return slope * point + shift == point


def _apply(group, x, point):
    slope, shift = group.affine_parts(x)
    return slope * point + shift


def _apply_inverse(group, x, point):
    slope, shift = group.affine_parts(x)
    return (point - shift) / slope


def _perturbed_param(group, param: OrderParam, positives) -> OrderParam:
    if param.infinite > 0:
        fixed = [shift / (1 - slope) for slope, shift in map(group.affine_parts, positives) if slope != 1]
        return OrderParam.above(math.floor(max(fixed, default=0)) + 1)
    if param.infinite < 0:
        fixed = [shift / (1 - slope) for slope, shift in map(group.affine_parts, positives) if slope != 1]
        return OrderParam.above(math.ceil(min(fixed, default=0)) - 1)
    v = param.value
    moving = [x for x in positives if not _fixes(group, x, v)]
    if param.side is Side.ABOVE:
        # elements fixing v have slope > 1 and stay positive to the right of v
        if not moving:
            return OrderParam.above(v + 1)
        hi = min(_apply(group, x, v) for x in moving)
        return OrderParam.above((v + hi) / 2)
    if not moving:
        return OrderParam.above(v - 1)
    lo = max(_apply_inverse(group, x, v) for x in moving)
    return OrderParam.above((lo + v) / 2)


def _probe_smirnov(oracle: SmirnovOrdering, positives) -> ProbeResult:
    group = oracle.group
    old = oracle.param
    new = _perturbed_param(group, old, positives)
    candidate = SmirnovOrdering(group, new)
    # conjugate the dilation by a translation landing strictly between the two base points
    lo = None if old.infinite < 0 else (new.value if old.infinite > 0 else min(old.value, new.value))
    hi = None if old.infinite > 0 else (new.value if old.infinite < 0 else max(old.value, new.value))
    t = _between(lo, hi, group.ring_base)
    g = group.translation(t)
    for n in range(1, WITNESS_EXPONENT_BOUND + 1):
        w = group.conj(g, group.power(group.dilation, n))
        if oracle._sign(w) != candidate._sign(w):
            return ProbeResult(False, candidate, w)
    raise ProbeError(f"no witness g b^n g^-1 with n <= {WITNESS_EXPONENT_BOUND}")


def _affine_lex_as_smirnov(oracle: LexOrdering) -> Ordering:
    top, bottom = oracle.signs
    inner = SmirnovOrdering(oracle.group, PLUS_INFINITY if top * bottom > 0 else MINUS_INFINITY)
    return inner if bottom > 0 else ReverseOrdering(inner)


def _finite_family(group: Group) -> bool:
    if isinstance(group, (IntegerGroup, RankOneGroup)):
        return True
    if isinstance(group, TowerGroup):
        return all(group.sigma(i, i + 1) == -1 for i in range(1, group.n))
    return False


def _probe_finite(oracle: Ordering, positives) -> ProbeResult:
    """Groups with finitely many left-orderings: every ordering is one of the
    lexicographic ones, so search them all."""
    group = oracle.group
    nearby = list(ball(group, _FINITE_SEARCH_RADIUS))
    gens = [group.level_generator(i) for i in range(1, group.series_length + 1)]
    for cand in all_lex(group, "tararin" if isinstance(group, TowerGroup) else "conrad"):
        if not all(cand._sign(x) == POSITIVE for x in positives):
            continue
        w = first_disagreement(oracle, cand, gens + nearby)
        if w is not None:
            return ProbeResult(False, cand, w)
    return ISOLATED


def _probe(oracle: Ordering, positives: list) -> ProbeResult:
    group = oracle.group
    if isinstance(oracle, ReverseOrdering):
        result = _probe(oracle.inner, [group.inv(x) for x in positives])
        if result.isolated:
            return result
        return ProbeResult(False, ReverseOrdering(result.oracle), result.witness)
    if isinstance(oracle, SmirnovOrdering):
        return _probe_smirnov(oracle, positives)
    if _finite_family(group):
        return _probe_finite(oracle, positives)
    if isinstance(oracle, LexOrdering):
        if isinstance(group, (F1Group, BS13Group)):
            return _probe(_affine_lex_as_smirnov(oracle), positives)
        if isinstance(group, GnGroup):
            split = group.split(1)
            as_ext = ExtensionOrdering(
                split, LexOrdering(split.quotient, oracle.signs[:2]), LexOrdering(split.sub, oracle.signs[2:])
            )
            return _probe(as_ext, positives)
    if isinstance(oracle, ExtensionOrdering):
        split = oracle.split
        upstairs = [split.project(x) for x in positives if not split.in_sub(x)]
        result = _probe(oracle.quotient, upstairs)
        if not result.isolated:
            return ProbeResult(
                False, ExtensionOrdering(split, result.oracle, oracle.sub), split.lift(result.witness)
            )
        downstairs = [split.sub_part(x) for x in positives if split.in_sub(x)]
        result = _probe(oracle.sub, downstairs)
        if not result.isolated:
            return ProbeResult(
                False, ExtensionOrdering(split, oracle.quotient, result.oracle), split.embed(result.witness)
            )
    raise ProbeError(f"no perturbation strategy for {oracle.descriptor()} on {group.family}")


def probe_neighborhood(oracle: Ordering, positives: Sequence) -> ProbeResult:
    """Find a different ordering in which every element of ``positives`` is
    still positive, together with an element on which the two disagree.

    Returns :data:`ISOLATED` only for groups with finitely many orderings
    after checking all of them.  Both properties of a returned neighbour are
    re-verified exactly before returning.
    """
    positives = list(positives)
    for x in positives:
        if oracle.sign(x) != POSITIVE:
            raise ValueError(f"{oracle.group.format_elem(x)} is not positive in the given ordering")
    result = _probe(oracle, positives)
    if result.isolated:
        return result
    cand, w = result.oracle, result.witness
    if not all(cand.sign(x) == POSITIVE for x in positives):
        raise ProbeError("internal: neighbour lost a positivity constraint")
    if oracle.sign(w) == cand.sign(w):
        raise ProbeError("internal: witness does not separate the two orderings")
    return result


def positive_subsets(oracle: Ordering, radius: int, max_size: int):
    """All sets of at most ``max_size`` positive elements of ball(radius)."""
    positives = [x for x in ball(oracle.group, radius) if oracle.sign(x) == POSITIVE]
    for size in range(1, max_size + 1):
        yield from itertools.combinations(positives, size)
