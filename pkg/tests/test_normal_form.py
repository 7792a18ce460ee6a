import pytest

from divmon import is_normal_pair, is_normal_word, normalize_oracle, render
from divmon.normal_form import (bounded_distance_left, bounded_distance_right, factorizations,
                                left_mult_update, parse_normal_word, product, right_mult_update)


def test_example_normal_form(tables):
    t = tables["squares"]
    nf = normalize_oracle(t, "yzyxxz")
    assert render(t, nf) == "[x y].y.y.[y z]"
    assert product(t, nf) == t.monoid.element("xxyyzz")
    assert parse_normal_word(t, "[x y].y.y.[y z]") == nf


def test_identity(tables):
    t = tables["divisibility"]
    assert normalize_oracle(t, "") == ()
    assert render(t, ()) == "1"
    assert parse_normal_word(t, "1") == ()


def test_free_monoid_is_letterwise(tables):
    t = tables["free2"]
    assert render(t, normalize_oracle(t, "xyyx")) == "x.y.y.x"


def test_trace_monoid_collects_commuting_letters(tables):
    t = tables["trace2"]
    assert render(t, normalize_oracle(t, "abab")) == "[a b].[a b]"
    assert render(t, normalize_oracle(t, "aab")) == "a.[a b]"


def test_normal_pairs(tables):
    t = tables["squares"]
    nf = normalize_oracle(t, "yzyxxz")
    assert is_normal_word(t, nf)
    for a in t.nontrivial:
        for b in t.nontrivial:
            expected = normalize_oracle(t, t.product(a, b)) == (a.id, b.id)
            assert is_normal_pair(t, a, b) == expected
    with pytest.raises(ValueError):
        is_normal_pair(t, 0, 1)


def test_factorizations_unique_normal(tables):
    t = tables["squares"]
    a = t.monoid.element("xxyyzz")
    facs = factorizations(t, a)
    assert len(facs) > 1
    assert [f for f in facs if is_normal_word(t, f)] == [normalize_oracle(t, a)]


def test_incremental_updates(tables):
    t = tables["cyclic"]
    m = t.monoid
    for a in m.elements_up_to(4):
        nf = normalize_oracle(t, a)
        for c in t:
            assert left_mult_update(t, c.id, nf) == normalize_oracle(t, m.product(c.element, a))
            assert right_mult_update(t, nf, c.id) == normalize_oracle(t, m.product(a, c.element))


def test_bounded_distance(tables):
    t = tables["divisibility"]
    assert bounded_distance_right(t, "x", "x") == 0
    assert bounded_distance_right(t, "x", "xy") == 1
    assert bounded_distance_left(t, "xy", "y") == 1
    assert bounded_distance_right(t, "x", "z") == 2
    assert bounded_distance_left(t, "", "xxx") == 2


def test_parse_rejects_garbage(tables):
    t = tables["divisibility"]
    with pytest.raises(ValueError):
        parse_normal_word(t, "[x z]")
    with pytest.raises(ValueError):
        parse_normal_word(t, "x..y")
