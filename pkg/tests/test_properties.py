"""Randomized cross-checks of the fast paths against the brute-force oracle."""

from hypothesis import given, settings, strategies as st

from divmon import Monoid, enumerate_hypercubes, normalize_fast, normalize_oracle, synthesize
from divmon.normal_form import is_normal_word, left_mult_update, product, right_mult_update
from divmon.presentation import parse_presentation
from divmon.transducer import deserialize, serialize

from conftest import build

TABLES = {name: enumerate_hypercubes(build(name)) for name in ("divisibility", "squares", "cyclic")}
MACHINES = {name: synthesize(t) for name, t in TABLES.items()}

names = st.sampled_from(sorted(TABLES))
words = st.lists(st.integers(0, 2), max_size=9).map(tuple)


@settings(max_examples=150, deadline=None)
@given(names, words)
def test_fast_equals_oracle(name, w):
    t = TABLES[name]
    nf = normalize_fast(MACHINES[name], w).factors
    assert nf == normalize_oracle(t, w)
    assert is_normal_word(t, nf)
    assert product(t, nf) == t.monoid.element(w)


@settings(max_examples=150, deadline=None)
@given(names, words, words)
def test_word_problem(name, u, v):
    t, mach = TABLES[name], MACHINES[name]
    same = normalize_fast(mach, u).factors == normalize_fast(mach, v).factors
    assert same == t.monoid.equal(u, v)


@settings(max_examples=100, deadline=None)
@given(names, words, st.data())
def test_incremental_updates(name, w, data):
    t = TABLES[name]
    m = t.monoid
    c = data.draw(st.sampled_from(list(t)))
    nf = normalize_oracle(t, w)
    assert left_mult_update(t, c.id, nf) == normalize_oracle(t, m.product(c.element, w))
    assert right_mult_update(t, nf, c.id) == normalize_oracle(t, m.product(w, c.element))


@settings(max_examples=60, deadline=None)
@given(names, words)
def test_concatenation_is_invariant(name, w):
    mach = MACHINES[name]
    t = TABLES[name]
    nf = normalize_fast(mach, w).factors
    again = normalize_fast(mach, t.monoid.element(w).word).factors
    assert nf == again


@settings(max_examples=40, deadline=None)
@given(names)
def test_serialization(name):
    mach = MACHINES[name]
    assert deserialize(serialize(mach)) == mach


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=0, max_size=3))
def test_presentation_text_round_trip(pairs):
    gens = "x y z".split()
    lines = ["generators: x y z"]
    for (a, b) in pairs:
        lines.append(f"rel: {gens[a]} {gens[b]} = {gens[b]} {gens[a]}")
    p = parse_presentation("\n".join(lines))
    assert parse_presentation(p.to_text()) == p
    assert Monoid(p).rank == 3
