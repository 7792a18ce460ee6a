import pytest

from divmon import hypercube_graph, reachable, strongly_connected
from divmon.hypercubes import graph_to_dot


def test_cube_counts(tables):
    counts = {name: len(t) for name, t in tables.items()}
    assert counts == {"divisibility": 5, "squares": 6, "cyclic": 8, "free2": 3, "trace2": 4}


def test_cube_ids_sorted_by_length(tables):
    for t in tables.values():
        keys = [(c.length, c.atoms) for c in t]
        assert keys == sorted(keys)
        assert t.trivial.is_trivial and t.trivial.id == 0


def test_cube_elements(tables):
    m = tables["divisibility"].monoid
    t = tables["divisibility"]
    assert t.find({"x", "y"}).element == m.element("xy")
    assert t.find({"x", "y"}).element == m.element("yz")
    with pytest.raises(KeyError):
        t.find({"x", "z"})
    c = tables["cyclic"]
    assert c.find({"x", "y", "z"}).element == c.monoid.element("zzz")
    assert c.name(c.find("zz")) == "[x z]"


def test_cube_atoms_are_its_left_divisors_of_length_one(tables):
    for t in tables.values():
        m = t.monoid
        for c in t:
            atoms = tuple(x for x in range(m.rank) if m.is_left_divisor(m.generator(x), c.element))
            assert atoms == c.atoms
            assert c.length == len(c.atoms)


def test_max_hypercube(tables):
    t = tables["cyclic"]
    assert t.name(t.max_hypercube("zzx")) == "[y z]"
    assert t.max_hypercube("").is_trivial
    s = tables["squares"]
    assert t.name(t.max_hypercube("x")) == "x"
    assert s.name(s.max_hypercube("yzyxxz")) == "[y z]"


def test_max_hypercube_dominates(tables):
    t = tables["squares"]
    m = t.monoid
    for a in m.elements_up_to(5):
        top = t.max_hypercube(a)
        for c in t:
            if m.is_right_divisor(c.element, a):
                assert m.is_right_divisor(c.element, top.element)


def test_graph_reachability(tables):
    t = tables["cyclic"]
    g = hypercube_graph(t)
    xz, x = t.find({"x", "z"}), t.find({"x"})
    assert xz.element == t.monoid.element("zz")
    assert not reachable(g, xz.id, x.id)
    assert reachable(g, x.id, x.id)
    assert reachable(g, x.id, xz.id)
    central = set(g.central())
    assert central == {0, t.find({"x", "y", "z"}).id}
    assert not strongly_connected(g, [v for v in g.vertices if v not in central])


def test_free_monoid_graph_is_complete(tables):
    t = tables["free2"]
    g = hypercube_graph(t)
    assert strongly_connected(g)
    assert len(g.edges) == 4


def test_dot_is_deterministic(tables):
    g = hypercube_graph(tables["squares"])
    text = graph_to_dot(g)
    assert text.startswith("digraph") and text == graph_to_dot(hypercube_graph(tables["squares"]))
