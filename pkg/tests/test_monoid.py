import pytest

from divmon import Monoid, NotADivisor


@pytest.fixture(scope="module")
def m3():
    return Monoid("generators: x y z\nrel: x x = y z\nrel: y y = z x\nrel: z z = x y\n")


def test_class_of_cube(m3):
    assert {m3.presentation.format_word(w) for w in m3.congruence_class("xxx")} == {"xxx", "xyz", "yyy", "yzx", "zxy", "zzz"}


def test_canonical_is_least_word(m3):
    assert m3.element("zzz").word == (0, 0, 0)
    assert m3.format(m3.element("yz")) == "xx"


def test_equal_and_product(monoids):
    m = monoids["squares"]
    assert m.equal("yzyxxz", "xxyyzz")
    assert not m.equal("xy", "yx")
    assert not m.equal("x", "xx")
    assert m.product("yz", "yxxz") == m.element("xxyyzz")


def test_elements_of_length_counts(monoids):
    free = monoids["free2"]
    assert [len(free.elements_of_length(n)) for n in range(5)] == [1, 2, 4, 8, 16]
    trace = monoids["trace2"]
    assert [len(trace.elements_of_length(n)) for n in range(5)] == [1, 2, 3, 4, 5]


def test_divisibility(monoids):
    m = monoids["divisibility"]
    assert m.is_left_divisor("y", "xy")   # xy = yz
    assert m.is_right_divisor("z", "xy")
    assert not m.is_left_divisor("z", "xy")
    assert m.is_left_divisor("1", "xy") and m.is_left_divisor("xy", "xy")


def test_quotients(monoids):
    m = monoids["divisibility"]
    assert m.right_quotient("xy", "z") == m.element("y")   # y.z = xy
    assert m.left_quotient("xy", "y") == m.element("z")    # y.z = xy
    with pytest.raises(NotADivisor):
        m.right_quotient("xy", "x")


def test_lcm_and_gcd(monoids):
    m = monoids["divisibility"]
    assert m.right_lcm(["x", "y"]) == m.element("xy")
    assert m.right_lcm(["x", "z"]) is None
    with pytest.raises(ValueError):
        m.right_lcm([])
    assert m.left_gcd("xy", "yy") == m.element("y")
    assert m.left_gcd("x", "z") == m.element("")
    squares = monoids["squares"]
    assert squares.right_lcm(["x", "z"]) is None


def test_lcm_is_least(monoids):
    m = monoids["cyclic"]
    l = m.right_lcm(["x", "y", "z"])
    assert l.length == 3
    for g in "xyz":
        assert m.is_left_divisor(g, l)
