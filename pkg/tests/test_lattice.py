import pytest

from divmon import DivisorLattice, Monoid, lattice_is_distributive, lattice_width


def diamond(n_middle):
    carrier = ["0"] + [f"a{i}" for i in range(n_middle)] + ["1"]
    k = len(carrier)
    leq = [[i == j or i == 0 or j == k - 1 for j in range(k)] for i in range(k)]
    return DivisorLattice.from_order(carrier, leq)


def test_m3_diamond_not_distributive():
    L = diamond(3)
    assert L.is_lattice and not lattice_is_distributive(L)
    assert lattice_width(L) == 3


def test_boolean_square_distributive():
    L = diamond(2)
    assert lattice_is_distributive(L)
    assert lattice_width(L) == 2


def test_pentagon_not_distributive():
    # 0 < a < b < 1, 0 < c < 1
    carrier = ["0", "a", "b", "c", "1"]
    rel = {("0", x) for x in carrier} | {(x, "1") for x in carrier} | {("a", "b")} | {(x, x) for x in carrier}
    leq = [[(x, y) in rel for y in carrier] for x in carrier]
    L = DivisorLattice.from_order(carrier, leq)
    assert L.is_lattice and not lattice_is_distributive(L)


def test_non_lattice_rejected():
    carrier = ["a", "b", "c", "d"]  # two minimal and two maximal elements, bowtie
    rel = {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")} | {(x, x) for x in carrier}
    L = DivisorLattice.from_order(carrier, [[(x, y) in rel for y in carrier] for x in carrier])
    assert L.is_partial_order() and not L.is_lattice
    with pytest.raises(ValueError):
        lattice_is_distributive(L)


def test_chain_width_one():
    m = Monoid("generators: x y\n")
    L = m.divisor_lattice("xyxy")
    assert len(L.carrier) == 5 and lattice_width(L) == 1
    assert lattice_is_distributive(L)


def test_divisor_lattice_bounds(monoids):
    m = monoids["divisibility"]
    L = m.divisor_lattice("xy")
    assert L.carrier[L.bottom] == m.element("") and L.carrier[L.top] == m.element("xy")
    assert lattice_width(L) == 2
