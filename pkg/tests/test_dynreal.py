import pytest

from ordspace.dynreal import RealizationMap, ball_enumeration, check_realization, realize
from ordspace.errors import DuplicateElementError, WrongGroupError
from ordspace.exact import OrderParam
from ordspace.orders import LexOrdering, SmirnovOrdering, all_lex


def test_worked_examples(f1, c_orders):
    c1 = c_orders[1]
    assert realize(c1, [f1("id")]).coordinates() == [0]
    assert realize(c1, [f1(w) for w in ("id", "a", "b", "a^-1")]).coordinates() == [0, 1, 2, -1]
    assert realize(c1, [f1(w) for w in ("id", "a", "a^-1", "a^2")]).coordinates() == [0, 1, -1, 2]


def test_midpoint_rule(f1, c_orders):
    rmap = realize(c_orders[1], [f1(w) for w in ("id", "b", "a")])
    assert rmap[f1("a")] == 0.5


def test_errors(f1, klein, c_orders):
    with pytest.raises(DuplicateElementError):
        realize(c_orders[1], [f1("id"), f1("a"), f1("b a b^-1 a^-1")])
    with pytest.raises(ValueError):
        realize(c_orders[1], [f1("a")])
    with pytest.raises(WrongGroupError):
        realize(c_orders[1], [f1("id"), klein("a1")])


def test_prefix_and_refinement(f1, c_orders):
    enum = ball_enumeration(f1, 3)
    full = realize(c_orders[1], enum)
    part = realize(c_orders[1], enum, 10)
    assert len(part) == 10
    assert part.entries == full.entries[:10]
    assert realize(c_orders[1], enum).entries == full.entries


def test_all_shapes_realize(f1_shapes, klein):
    for o in f1_shapes + all_lex(klein, "tararin"):
        rmap = realize(o, ball_enumeration(o.group, 3))
        assert check_realization(rmap, o).ok


def test_swapped_entries_are_reported(f1, c_orders):
    c1 = c_orders[1]
    rmap = realize(c1, [f1(w) for w in ("id", "a", "b", "a^-1")])
    (x0, t0), (x1, t1), (x2, t2), (x3, t3) = rmap.entries
    swapped = RealizationMap(f1, [(x0, t0), (x1, t2), (x2, t1), (x3, t3)])
    report = check_realization(swapped, c1)
    assert not report.ok
    assert report.details["checks"]["order"] is False
    assert ("a", "b") in [v.words for v in report.violations if v.kind == "order"]


def test_mismatched_group(f1, g2, c_orders):
    rmap = realize(c_orders[1], [f1("id")])
    with pytest.raises(WrongGroupError):
        check_realization(rmap, LexOrdering(g2, (1, 1, 1)))


def test_sign_recovery_uses_origin(f1):
    o = SmirnovOrdering(f1, OrderParam.below(2))
    rmap = realize(o, ball_enumeration(f1, 2))
    for x, t in rmap.entries:
        assert (t > 0) == (o.sign(x) == 1)
