"""Property suite cross-checking the fast paths against the brute-force oracle."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .automatic import fellow_traveller_report
from .hypercubes import Hypercube, HypercubeTable, enumerate_hypercubes
from .monoid import Element, Monoid
from .normal_form import (factorizations, is_normal_word, left_mult_update, normalize_oracle,
                          product, right_mult_update)
from .presentation import parse_presentation
from .transducer import (Transducer, deserialize, normalize_fast, run, synthesize,
                         synthesize_augmented)

HMap = Callable[[Element], Hypercube]


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, witness) -> None:
        if len(self.failures) < 20:
            self.failures.append(witness)
        else:
            self.failures.append(None)


def _pairs_up_to(m: Monoid, total: int):
    for n in range(total + 1):
        for k in range(n + 1):
            for a in m.elements_of_length(k):
                for b in m.elements_of_length(n - k):
                    yield a, b


def check_head_absorption(table: HypercubeTable, max_length: int, h: Optional[HMap] = None) -> PropertyResult:
    """``h(ab) = h(h(a)b)`` for ``|a| + |b| <= max_length``."""
    m = table.monoid
    h = h or table.max_hypercube
    res = PropertyResult("head_absorption")
    for a, b in _pairs_up_to(m, max_length):
        res.cases += 1
        if h(m.product(a, b)) != h(m.product(h(a).element, b)):
            res.fail((a.word, b.word))
    return res


def check_max_hypercube(table: HypercubeTable, max_length: int, h: Optional[HMap] = None) -> PropertyResult:
    """``h`` is idempotent, right-divides its argument and dominates every right-dividing cube."""
    m = table.monoid
    h = h or table.max_hypercube
    res = PropertyResult("max_hypercube")
    for a in m.elements_up_to(max_length):
        res.cases += 1
        top = h(a)
        ok = h(top.element) == top and m.is_right_divisor(top.element, a)
        ok = ok and all(m.is_right_divisor(c.element, top.element)
                        for c in table if m.is_right_divisor(c.element, a))
        if not ok:
            res.fail(a.word)
    return res


def check_local_normality(table: HypercubeTable, max_length: int) -> PropertyResult:
    """A cube sequence is the normal form of its product iff every adjacent pair is normal."""
    res = PropertyResult("local_normality")
    cubes = table.nontrivial

    def extend(prefix, length):
        yield prefix
        for c in cubes:
            if length + c.length <= max_length:
                yield from extend(prefix + (c.id,), length + c.length)

    for seq in extend((), 0):
        if not seq:
            continue
        res.cases += 1
        if is_normal_word(table, seq) != (normalize_oracle(table, product(table, seq)) == seq):
            res.fail(seq)
    return res


def check_two_factor(table: HypercubeTable) -> PropertyResult:
    res = PropertyResult("two_factor")
    for a, b in itertools.product(table, repeat=2):
        res.cases += 1
        if len(normalize_oracle(table, table.product(a, b))) > 2:
            res.fail((a.id, b.id))
    return res


def check_incremental(table: HypercubeTable, max_length: int) -> PropertyResult:
    """Incremental left/right multiplication updates match recomputation."""
    m = table.monoid
    res = PropertyResult("incremental")
    for a in m.elements_up_to(max_length):
        nf = normalize_oracle(table, a)
        for c in table:
            if a.length + c.length > max_length:
                continue
            res.cases += 2
            if left_mult_update(table, c.id, nf) != normalize_oracle(table, m.product(c.element, a)):
                res.fail(("left", c.id, a.word))
            if right_mult_update(table, nf, c.id) != normalize_oracle(table, m.product(a, c.element)):
                res.fail(("right", a.word, c.id))
    return res


def check_uniqueness(table: HypercubeTable, max_length: int) -> PropertyResult:
    """Exactly one cube factorization of each element is normal, and it is ``N(a)``."""
    m = table.monoid
    res = PropertyResult("uniqueness")
    for a in m.elements_up_to(max_length):
        res.cases += 1
        normal = [f for f in factorizations(table, a) if is_normal_word(table, f)]
        if normal != [normalize_oracle(table, a)]:
            res.fail(a.word)
    return res


def _words(rank: int, max_length: int):
    for n in range(max_length + 1):
        yield from itertools.product(range(rank), repeat=n)


def check_transducer(table: HypercubeTable, machine: Transducer, max_length: int) -> PropertyResult:
    """``normalize_fast`` equals the oracle, the first run yields ``h(w)``, and
    normal-form equality induces exactly the congruence on words."""
    m = table.monoid
    res = PropertyResult("transducer")
    nf_of_class: dict[tuple, tuple] = {}
    class_of_nf: dict[tuple, tuple] = {}
    for w in _words(m.rank, max_length):
        res.cases += 1
        fast = normalize_fast(machine, w).factors
        a = m.element(w)
        if fast != normalize_oracle(table, a):
            res.fail(("normal form", w))
            continue
        if w and run(machine, w)[0] != table.max_hypercube(a).id:
            res.fail(("head", w))
        if nf_of_class.setdefault(a.word, fast) != fast or class_of_nf.setdefault(fast, a.word) != a.word:
            res.fail(("word problem", w))
    return res


def check_augmented(table: HypercubeTable, max_length: int) -> PropertyResult:
    """The augmented machine on one-letter cubes agrees with the base machine,
    and each of its arrows is the normal form of a product of two cubes."""
    m = table.monoid
    base, aug = synthesize(table), synthesize_augmented(table)
    res = PropertyResult("augmented")
    letter = [table.generator_cube(x).id for x in range(m.rank)]
    for w in _words(m.rank, max_length):
        res.cases += 1
        if normalize_fast(aug, [letter[x] for x in w]).factors != normalize_fast(base, w).factors:
            res.fail(w)
    for a, c in itertools.product(table, repeat=2):
        res.cases += 1
        expected = normalize_oracle(table, table.product(a, c))
        got = tuple(k for k in aug.output[a.id, c.id] + (aug.delta[a.id, c.id],) if k != 0)
        if got != expected:
            res.fail((a.id, c.id))
    return res


def check_fellow_traveller(table: HypercubeTable, max_length: int, h: Optional[HMap] = None) -> PropertyResult:
    rep = fellow_traveller_report(table, max_length, h)
    res = PropertyResult("fellow_traveller", rep.cases)
    for v in rep.violations:
        res.fail(v)
    return res


SUITE = ("head_absorption", "max_hypercube", "local_normality", "two_factor", "incremental", "uniqueness",
         "transducer", "augmented", "fellow_traveller")


def run_check(name: str, table: HypercubeTable, max_length: int,
              machine: Optional[Transducer] = None) -> PropertyResult:
    if name == "head_absorption":
        return check_head_absorption(table, max_length)
    if name == "max_hypercube":
        return check_max_hypercube(table, max_length)
    if name == "local_normality":
        return check_local_normality(table, max_length)
    if name == "two_factor":
        return check_two_factor(table)
    if name == "incremental":
        return check_incremental(table, max_length)
    if name == "uniqueness":
        return check_uniqueness(table, min(max_length, 5))
    if name == "transducer":
        return check_transducer(table, machine or synthesize(table), max_length)
    if name == "augmented":
        return check_augmented(table, min(max_length, 6))
    if name == "fellow_traveller":
        return check_fellow_traveller(table, max_length)
    raise KeyError(f"unknown property {name!r}")


def _worker(presentation_text: str, name: str, max_length: int, machine_text: Optional[str],
            class_cap: int, oracle_length: int) -> PropertyResult:
    m = Monoid(parse_presentation(presentation_text), class_cap=class_cap, max_length=oracle_length)
    table = enumerate_hypercubes(m)
    machine = deserialize(machine_text) if machine_text else None
    return run_check(name, table, max_length, machine)


def run_suite(table: HypercubeTable, max_length: int, machine: Optional[Transducer] = None,
              names=SUITE, jobs: int = 1) -> list[PropertyResult]:
    """Run the named checks; with ``jobs > 1`` each check runs in its own process
    on a freshly built oracle, so no memo table is shared."""
    if jobs <= 1:
        return [run_check(n, table, max_length, machine) for n in names]
    from .transducer import serialize

    m = table.monoid
    text = m.presentation.to_text()
    machine_text = serialize(machine) if machine is not None else None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_worker, text, n, max_length, machine_text, m.class_cap, m.max_length)
                   for n in names]
        return [f.result() for f in futures]
