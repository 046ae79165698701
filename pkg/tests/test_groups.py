from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordspace.errors import BallCapError, InvalidDescriptorError, UnknownGeneratorError, WordSyntaxError
from ordspace.groups import (
    BS13Group,
    F1Elem,
    F1Group,
    GnGroup,
    IntegerGroup,
    RankOneGroup,
    TowerGroup,
    ball,
    chi,
    format_word,
    group_from_json,
    member_G1,
    member_Hnk,
    parse_word,
)

GROUPS = [F1Group(2), F1Group(Fraction(3, 2)), F1Group(Fraction(1, 2)), TowerGroup.klein(), GnGroup(2), GnGroup(-3), BS13Group()]


def words(group, max_len=6):
    gens = st.sampled_from(group.generator_names)
    exps = st.integers(-3, 3)
    return st.lists(st.tuples(gens, exps), max_size=max_len)


def test_parse_word_forms():
    assert parse_word("b a^-5 c^{1/3}") == [("b", 1), ("a", -5), ("c", Fraction(1, 3))]
    assert parse_word("id") == []
    assert parse_word("1") == []
    with pytest.raises(WordSyntaxError):
        parse_word("a^")
    with pytest.raises(UnknownGeneratorError):
        F1Group(2).eval_word("z")


def test_format_word_merges_runs():
    assert format_word([("a", 1), ("a", 2), ("b", -1)]) == "a^3 b^-1"
    assert format_word([("a", 1), ("a", -1)]) == "id"
    assert format_word([]) == "id"


def test_f1_defining_relation():
    g = F1Group(2)
    assert g("b a b^-1") == g.elem(0, 2)
    assert g.elem_to_json(g("b a b^-1")) == {"k": 0, "s": "2"}
    assert g("b a^-6") == F1Elem(1, -6)
    assert g.format_elem(F1Elem(1, Fraction(-13, 8))) == "b a^{-13/8}"


def test_f1_flipped_ratio_keeps_caller_b():
    g = F1Group(Fraction(1, 2))
    assert g.conj(g("b"), g("a")) == g("a^{1/2}")
    assert g.elem_to_json(g("b")) == {"k": 1, "s": "0"}


def test_f1_rejects_bad_ratios_and_exponents():
    with pytest.raises(InvalidDescriptorError):
        F1Group(1)
    with pytest.raises(ValueError):
        F1Group(2).eval_word("a^{1/3}")
    with pytest.raises(ValueError):
        F1Group(2).eval_word("b^{1/2}")


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: str(g.descriptor()))
def test_group_axioms_on_ball(group):
    b = list(ball(group, 2))
    e = group.identity()
    for x in b:
        assert group.mul(x, group.inv(x)) == e
        assert group.mul(e, x) == x
        for y in b[:15]:
            for z in b[:8]:
                assert group.mul(group.mul(x, y), z) == group.mul(x, group.mul(y, z))


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: str(g.descriptor()))
def test_words_evaluate_consistently(group):
    @given(words(group), words(group))
    def check(u, v):
        assert group.eval_word(u + v) == group.mul(group.eval_word(u), group.eval_word(v))
        assert group.eval_word(format_word(u)) == group.eval_word(u)

    check()


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: str(g.descriptor()))
def test_ball_words_evaluate_to_their_elements(group):
    b = ball(group, 3)
    for x in b:
        assert group.eval_word(b.word(x)) == x
        assert group.contains(x)


def test_f1_affine_representation_is_a_homomorphism():
    g = F1Group(3)
    b = list(ball(g, 2))
    for x in b:
        for y in b:
            assert g.phi(g.mul(x, y)) == g.phi(x).compose(g.phi(y))


def test_ball_sizes():
    assert [len(ball(F1Group(2), r)) for r in range(7)] == [1, 5, 17, 43, 93, 191, 375]
    assert [len(ball(GnGroup(2), r)) for r in range(5)] == [1, 7, 33, 127, 425]
    assert len(ball(IntegerGroup(), 3)) == 7


def test_ball_order_and_words():
    b = ball(F1Group(2), 6)
    assert b.elements[0] == F1Group(2).identity()
    keys = [(b.length(x), b.word(x)) for x in b]
    assert keys == sorted(keys)
    assert b.word(F1Elem(1, -6)) == "b^2 a^-3 b^-1"
    assert len(b.sphere(1)) == 4 and len(b.within(1)) == 5


def test_ball_cap(monkeypatch):
    with pytest.raises(BallCapError):
        ball(F1Group(2), 5, cap=50)
    monkeypatch.setenv("ORDSPACE_BALL_CAP", "10")
    with pytest.raises(BallCapError):
        ball(F1Group(5), 3)


def test_tower_relations():
    k = TowerGroup.klein()
    assert k.conj(k("a2"), k("a1")) == k("a1^-1")
    t = TowerGroup.from_signs(3, {(1, 2): -1, (2, 3): -1})
    assert t.conj(t("a3"), t("a2")) == t("a2^-1")
    assert t.conj(t("a3"), t("a1")) == t("a1")


def test_gn_chi_and_membership():
    g = GnGroup(2)
    bs = BS13Group()
    assert chi(bs("b"), 2) == -1
    assert chi(bs("c"), 2) == 2
    assert member_G1(g, g("a^5"))
    assert not member_G1(g, g("b"))
    assert member_Hnk(g, 1, g("c b"))
    assert member_Hnk(g, 1, g("a"))
    assert not member_Hnk(g, 1, g("c"))


def test_group_descriptors_round_trip():
    for group in GROUPS + [IntegerGroup(), RankOneGroup(6)]:
        assert group_from_json(group.descriptor()) == group


@pytest.mark.parametrize(
    "data",
    [{}, {"family": "nope"}, {"family": "f1"}, {"family": "gn", "n": 0}, {"family": "tower", "n": 2, "signs": {"1,2": 3}}],
)
def test_bad_group_descriptors(data):
    with pytest.raises(InvalidDescriptorError):
        group_from_json(data)
