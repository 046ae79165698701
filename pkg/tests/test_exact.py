from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordspace.exact import (
    MINUS_INFINITY,
    PLUS_INFINITY,
    AffineMap,
    OrderParam,
    Side,
    affine_apply,
    affine_compose,
    affine_invert,
    format_rational,
    in_localization,
    param_compare,
    to_rational,
)

rationals = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 64))
slopes = st.builds(Fraction, st.integers(1, 1000), st.integers(1, 64))
maps = st.builds(AffineMap, slopes, rationals)


def test_to_rational_refuses_floats():
    with pytest.raises(TypeError):
        to_rational(0.5)
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(-2) == -2
    with pytest.raises(ValueError):
        to_rational("x")


def test_format_rational():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(2) == "2"


@pytest.mark.parametrize(
    "q,m,expected",
    [(Fraction(13, 8), 2, True), (Fraction(1, 3), 2, False), (Fraction(5, 18), 6, True), (Fraction(1, 5), 1, False)],
)
def test_in_localization(q, m, expected):
    assert in_localization(q, m) is expected


def test_affine_basics():
    f = AffineMap(2, 1)
    assert f(3) == 7
    assert f.fixed_point() == -1
    assert AffineMap.translation(5).fixed_point() is None
    assert f.compose(f.inverse()) == AffineMap.identity()
    assert affine_apply(AffineMap.dilation(3), "1/3") == 1
    with pytest.raises(ValueError):
        AffineMap(-1, 0)


@given(maps, maps, rationals)
def test_compose_applies_right_first(f, g, x):
    assert affine_compose(f, g)(x) == f(g(x))


@given(maps, rationals)
def test_inverse_round_trip(f, x):
    assert affine_invert(f)(f(x)) == x


@given(maps)
def test_fixed_point_is_fixed(f):
    p = f.fixed_point()
    if p is not None:
        assert f(p) == p


def test_param_compare_resolves_ties_by_side():
    assert OrderParam.above(2).compare(2) == 1
    assert OrderParam.below(2).compare(2) == -1
    assert param_compare(OrderParam.above(2), 3) == -1
    assert PLUS_INFINITY.compare(10 ** 9) == 1
    assert MINUS_INFINITY.compare(-(10 ** 9)) == -1


def test_param_total_order():
    params = [PLUS_INFINITY, OrderParam.above(1), OrderParam.below(1), MINUS_INFINITY, OrderParam.below(0)]
    assert sorted(params) == [MINUS_INFINITY, OrderParam.below(0), OrderParam.below(1), OrderParam.above(1), PLUS_INFINITY]


@given(rationals, st.sampled_from(list(Side)))
def test_param_json_round_trip(v, side):
    p = OrderParam.finite(v, side)
    assert OrderParam.from_json(p.to_json()) == p


def test_param_json_infinities_and_errors():
    assert OrderParam.from_json("+inf") is PLUS_INFINITY
    assert OrderParam.from_json(MINUS_INFINITY.to_json()) == MINUS_INFINITY
    assert PLUS_INFINITY.kind == "PlusInfinity"
    assert not PLUS_INFINITY.is_finite
    with pytest.raises(ValueError):
        OrderParam.from_json({"side": "above"})
    with pytest.raises(ValueError):
        OrderParam(value=Fraction(1))
