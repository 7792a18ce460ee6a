"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from divmon import (check_all, enumerate_hypercubes, hypercube_graph, lattice_width,  # noqa: E402
                    normalize_fast, reachable, run, strongly_connected, synthesize)
from divmon import automatic as auto  # noqa: E402
from divmon.verify import run_check  # noqa: E402

from conftest import build  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}
SAMPLES = ("divisibility", "squares", "cyclic")
_cache: dict[str, tuple] = {}


def sample(name):
    if name not in _cache:
        m = build(name)
        t = enumerate_hypercubes(m)
        _cache[name] = (m, t, synthesize(t))
    return _cache[name]


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {detail}")
    assert ok, detail


def criterion_1():
    verdicts, slowest = {}, 0.0
    for name in SAMPLES + ("free2", "trace2", "bad"):
        t0 = time.perf_counter()
        verdicts[name] = check_all(build(name)).passed
        slowest = max(slowest, time.perf_counter() - t0)
    expected = {name: name != "bad" for name in verdicts}
    ok = verdicts == expected and slowest < 1.0
    record(1, ok, f"axiom gate verdicts {verdicts}, slowest {slowest:.3f} s")


def criterion_2():
    states = [len(sample(n)[2].states) for n in SAMPLES]
    arrows = sample("divisibility")[2].n_arrows
    record(2, states == [5, 6, 8] and arrows == 15, f"states {states}, arrows {arrows}")


def criterion_3():
    m, t, mach = sample("squares")
    p = m.presentation
    q1, out1 = run(mach, p.parse_word("yzyxxz"))
    q2, out2 = run(mach, p.parse_word("xxyy"))
    res = normalize_fast(mach, p.parse_word("yzyxxz"))
    factors = [m.format(t[k].element) for k in res.factors]
    ok = (t[q1].element == m.element("zz") and m.element(out1) == m.element("xxyy")
          and t[q2].element == m.element("y") and m.element(out2) == m.element("xxy")
          and [t[k].element for k in res.factors] == [m.element(w) for w in ("xx", "y", "y", "zz")]
          and res.runs == 4)
    record(3, ok, f"run(yzyxxz) = ({m.format(t[q1].element)}, {m.format(out1)}), "
                  f"run(xxyy) = ({m.format(t[q2].element)}, {m.format(out2)}), "
                  f"N = {'.'.join(factors)} in {res.runs} runs")


def criterion_4():
    m, t, mach = sample("divisibility")
    w = t.find({"x", "y"}).id
    z = m.presentation.index("z")
    target, out = mach.delta[w, z], mach.output[w, z]
    ok = target == w and m.element(out) == m.element("x")
    record(4, ok, f"{t.name(w)} --z|{m.format(out)}--> {t.name(target)}")


def criterion_5():
    m = build("cyclic")
    t0 = time.perf_counter()
    widths = [lattice_width(m.divisor_lattice("x" * n)) for n in range(1, 7)]
    elapsed = time.perf_counter() - t0
    expected = [round((n + 3) ** 2 / 12) for n in range(1, 7)]
    record(5, widths == expected and elapsed < 10, f"widths {widths} (expected {expected}) in {elapsed:.2f} s")


def criterion_6():
    m, t, _ = sample("cyclic")
    g = hypercube_graph(t)
    source, target = t.lookup("zz"), t.find({"x"})
    central = set(g.central())
    rest = [v for v in g.vertices if v not in central]
    no_path = not reachable(g, source.id, target.id)
    scc = strongly_connected(g, rest)
    record(6, no_path and not scc and len(rest) == 6,
           f"{t.name(source)} -> x reachable: {not no_path}; strongly connected on {len(rest)} cubes: {scc}")


def criterion_7():
    parts, ok = [], True
    for name in SAMPLES:
        m, t, mach = sample(name)
        res = run_check("transducer", t, 8, mach)
        ok &= res.ok
        parts.append(f"{name}: {res.cases} words, {len(res.failures)} failures")
    record(7, ok, "oracle equivalence up to length 8; " + "; ".join(parts))


def criterion_8():
    parts, ok = [], True
    for name in SAMPLES:
        _, t, _ = sample(name)
        cases = 0
        for check in ("head_absorption", "local_normality", "two_factor", "incremental"):
            res = run_check(check, t, 8)
            ok &= res.ok
            cases += res.cases
            if not res.ok:
                parts.append(f"{name}/{check} failed at {res.failures[0]}")
        parts.append(f"{name}: {cases} cases")
    record(8, ok, "structural properties up to length 8; " + "; ".join(parts))


def criterion_9():
    parts, ok = [], True
    for name in SAMPLES:
        _, t, _ = sample(name)
        rep = auto.fellow_traveller_report(t, 6)
        ok &= rep.ok and rep.max_left < 2 and rep.max_right < 2
        parts.append(f"{name}: max left {rep.max_left}, max right {rep.max_right}, {rep.cases} cases")
    record(9, ok, "fellow traveller at L=6; " + "; ".join(parts))


def criterion_10():
    parts, ok = [], True
    for name in SAMPLES:
        _, t, _ = sample(name)
        words = auto.normal_words(t, 5)
        machines = [auto.equality_recognizer(t)]
        machines += [auto.right_multiplier_automaton(t, c.id) for c in t.nontrivial]
        machines += [auto.left_multiplier_automaton(t, c.id) for c in t.nontrivial]
        mismatches = sum(len(auto.check_language(mach, t, 5, words).mismatches) for mach in machines)
        biggest = max(len(auto.right_multiplier_automaton(t, c.id).states) for c in t)
        ok &= mismatches == 0 and biggest <= len(t) + 2
        parts.append(f"{name}: {len(machines)} machines, {mismatches} mismatches, "
                     f"right multiplier states {biggest} <= {len(t) + 2}")
    record(10, ok, "; ".join(parts))


def criterion_11():
    _, t, mach = sample("squares")
    rng = random.Random(0)
    ok, parts, slowest = True, [], 0.0
    families = {"x^n": lambda n: [0] * n, "random": lambda n: [rng.randrange(3) for _ in range(n)]}
    for family, make in families.items():
        steps = []
        for n in (64, 128, 256, 512):
            word = make(n)
            t0 = time.perf_counter()
            steps.append(normalize_fast(mach, word).steps)
            slowest = max(slowest, time.perf_counter() - t0)
            ok &= steps[-1] <= n * (n + 1) // 2
        ratios = [b / a for a, b in zip(steps, steps[1:])]
        ok &= all(r <= 4.5 for r in ratios)
        parts.append(f"{family} steps {steps} ratios {[round(r, 2) for r in ratios]}")
    ok &= slowest < 1.0 and normalize_fast(mach, []).steps == 0
    record(11, ok, "; ".join(parts) + f"; slowest {slowest * 1e3:.1f} ms")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_acceptance(criterion):
    criterion()


if __name__ == "__main__":
    failed = 0
    for criterion in CRITERIA:
        try:
            criterion()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
