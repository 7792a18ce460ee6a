"""Biautomatic structure over the hypercube alphabet.

Pair automata read padded convolutions of two normal words ``(u, v)`` and
track the "difference" between the prefixes read so far.  With ``P`` and ``Q``
the two prefixes (after multiplying ``P`` by ``y`` for left multiplication),
the state is the pair ``(α, β)`` with ``P = g·α``, ``Q = g·β`` and
``g = gcd(P, Q)``.  A state whose components are not both hypercubes is sent to
an explicit dead state.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .exceptions import MachineFormatError
from .hypercubes import HypercubeTable
from .monoid import Element
from .normal_form import (AT_LEAST_TWO, NormalWord, bounded_distance_left, bounded_distance_right,
                          is_normal_pair, normalize_oracle, product)

PAD = "$"
DEAD = "dead"
HEADER = "divmon-pair-automaton v1"

Column = tuple  # (letter or PAD, letter or PAD)


def convolve_right(u: Sequence, v: Sequence) -> tuple[Column, ...]:
    """Align from the left, padding the shorter word at the end."""
    n = max(len(u), len(v))
    u = list(u) + [PAD] * (n - len(u))
    v = list(v) + [PAD] * (n - len(v))
    return tuple(zip(u, v))


def convolve_left(u: Sequence, v: Sequence) -> tuple[Column, ...]:
    """Mirror image of :func:`convolve_right`: align from the right, pad at the start."""
    return tuple(reversed(convolve_right(tuple(reversed(u)), tuple(reversed(v)))))


@dataclass(frozen=True)
class Automaton:
    """Complete deterministic automaton; missing transitions are not allowed."""

    alphabet: tuple
    states: tuple
    initial: int
    accepting: frozenset
    delta: dict = field(repr=False)

    def accepts(self, word: Iterable) -> bool:
        q = self.initial
        for letter in word:
            q = self.delta.get((q, letter))
            if q is None:
                return False
        return q in self.accepting


def normal_language_automaton(table: HypercubeTable) -> Automaton:
    """Accepts exactly the normal words: a path in the graph of hypercubes."""
    cubes = [c.id for c in table.nontrivial]
    states = ("start",) + tuple(cubes) + (DEAD,)
    index = {s: i for i, s in enumerate(states)}
    dead = index[DEAD]
    delta = {}
    for q in states:
        for b in cubes:
            if q == "start":
                target = b
            elif q == DEAD:
                target = DEAD
            else:
                target = b if is_normal_pair(table, q, b) else DEAD
            delta[index[q], b] = index[target]
    accepting = frozenset(i for i in range(len(states)) if i != dead)
    return Automaton(tuple(cubes), states, 0, accepting, delta)


@dataclass(frozen=True)
class PairAutomaton:
    """Deterministic automaton over padded columns of hypercube letters.

    ``states`` holds ``(α, β)`` pairs of canonical words, or :data:`DEAD`.
    ``multiplication`` is ``"left"`` (``y·u = v``) or ``"right"`` (``u·z = v``)
    and ``cube`` the multiplier's id; cube 0 gives an equality recognizer.
    """

    padding: str
    multiplication: str
    cube: int
    generators: tuple[str, ...]
    alphabet: tuple
    states: tuple
    initial: int
    accepting: frozenset
    delta: dict = field(repr=False)

    def step(self, q: int, column: Column) -> int:
        return self.delta[q, column]

    def accepts(self, columns: Iterable[Column]) -> bool:
        q = self.initial
        for col in columns:
            q = self.delta.get((q, tuple(col)))
            if q is None:
                return False
        return q in self.accepting

    def accepts_pair(self, u: Sequence, v: Sequence) -> bool:
        conv = convolve_left if self.padding == "left" else convolve_right
        return self.accepts(conv(u, v))

    @property
    def live_states(self) -> int:
        return sum(1 for s in self.states if s != DEAD)


def _columns(table: HypercubeTable) -> tuple[Column, ...]:
    letters = [c.id for c in table.nontrivial] + [PAD]
    return tuple((a, b) for a in letters for b in letters if (a, b) != (PAD, PAD))


def _difference_machine(table: HypercubeTable, padding: str, multiplication: str, cube: int,
                        start: tuple[Element, Element], goal: tuple[Element, Element],
                        admissible: Callable[[Element, Element], bool]) -> PairAutomaton:
    if padding not in ("left", "right"):
        raise ValueError(f"padding must be 'left' or 'right', not {padding!r}")
    m = table.monoid
    columns = _columns(table)

    def letter(c):
        return m.one if c == PAD else table[c].element

    def reduce(p: Element, q: Element):
        g = m.left_gcd(p, q)
        return m.left_quotient(p, g), m.left_quotient(q, g)

    start = reduce(*start)
    states: list = [start]
    index: dict[Hashable, int] = {start: 0}
    delta = {}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        src = index[state]
        for col in columns:
            if state == DEAD:
                nxt = DEAD
            else:
                alpha, beta = state
                nxt = reduce(m.product(alpha, letter(col[0])), m.product(beta, letter(col[1])))
                if not admissible(*nxt):
                    nxt = DEAD
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            delta[src, col] = index[nxt]
    goal = reduce(*goal)
    accepting = frozenset([index[goal]]) if goal in index else frozenset()
    labels = tuple(s if s == DEAD else (s[0].word, s[1].word) for s in states)
    return PairAutomaton(padding, multiplication, cube, m.presentation.generators,
                         columns, labels, 0, accepting, delta)


def _both_cubes(table):
    def check(a: Element, b: Element) -> bool:
        return table.lookup(a) is not None and table.lookup(b) is not None
    return check


def right_multiplier_automaton(table: HypercubeTable, z=0, padding: str = "left") -> PairAutomaton:
    """Accepts the convolutions of normal ``(u, v)`` with ``u·z = v``.

    With left padding the state is a single cube ``d`` satisfying
    ``prefix(u)·d = prefix(v)``, so the machine has at most ``|H| + 1`` states.
    """
    z = table.find(z)
    one = table.monoid.one
    if padding == "left":
        admissible = lambda a, b: a.is_identity and table.lookup(b) is not None  # noqa: E731
    else:
        admissible = _both_cubes(table)
    return _difference_machine(table, padding, "right", z.id, (one, one), (one, z.element), admissible)


def left_multiplier_automaton(table: HypercubeTable, y=0, padding: str = "right") -> PairAutomaton:
    """Accepts the convolutions of normal ``(u, v)`` with ``y·u = v``."""
    y = table.find(y)
    one = table.monoid.one
    return _difference_machine(table, padding, "left", y.id, (y.element, one), (one, one),
                               _both_cubes(table))


def equality_recognizer(table: HypercubeTable, padding: str = "left") -> PairAutomaton:
    return right_multiplier_automaton(table, 0, padding)


def restrict_to_normal(machine: PairAutomaton, table: HypercubeTable) -> PairAutomaton:
    """Product of ``machine`` with two copies of the normal-language automaton and
    a padding-shape check, so the language is exactly the stated relation on
    well-formed convolutions of normal words."""
    def track(state, letter):
        # state: "pre" (nothing read), "pad" (only padding read), cube id, or "end" (padding after letters)
        if state == DEAD:
            return DEAD
        if letter == PAD:
            if machine.padding == "left":
                return "pad" if state in ("pre", "pad") else DEAD
            return DEAD if state == "pre" else "end"
        if state == "end":
            return DEAD
        if state in ("pre", "pad") or is_normal_pair(table, state, letter):
            return letter
        return DEAD

    start = (machine.initial, "pre", "pre")
    states = [start]
    index = {start: 0}
    delta = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for col in machine.alphabet:
            if cur == DEAD:
                nxt = DEAD
            else:
                q, su, sv = cur
                nu, nv = track(su, col[0]), track(sv, col[1])
                nq = machine.delta[q, col]
                nxt = DEAD if DEAD in (nu, nv) or machine.states[nq] == DEAD else (nq, nu, nv)
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            delta[index[cur], col] = index[nxt]
    accepting = frozenset(i for i, s in enumerate(states) if s != DEAD and s[0] in machine.accepting)
    labels = tuple(s if s == DEAD else (machine.states[s[0]], s[1], s[2]) for s in states)
    return PairAutomaton(machine.padding, machine.multiplication, machine.cube, machine.generators,
                         machine.alphabet, labels, 0, accepting, delta)


# -- oracle sweeps -----------------------------------------------------------

def normal_words(table: HypercubeTable, max_length: int) -> list[tuple[NormalWord, Element]]:
    """Normal forms of every element of length at most ``max_length``."""
    m = table.monoid
    return [(normalize_oracle(table, a), a) for a in m.elements_up_to(max_length)]


@dataclass
class LanguageCheck:
    machine: PairAutomaton
    pairs: int = 0
    accepted: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_language(machine: PairAutomaton, table: HypercubeTable, max_length: int,
                   words: Optional[list] = None) -> LanguageCheck:
    """Compare acceptance with the defining equation on all normal pairs."""
    m = table.monoid
    words = normal_words(table, max_length) if words is None else words
    mult = table[machine.cube].element
    result = LanguageCheck(machine)
    for (u, a), (v, b) in itertools.product(words, repeat=2):
        if b.length != a.length + mult.length:
            truth = False
        elif machine.multiplication == "right":
            truth = m.product(a, mult) == b
        else:
            truth = m.product(mult, a) == b
        got = machine.accepts_pair(u, v)
        result.pairs += 1
        result.accepted += got
        if got != truth:
            result.mismatches.append((u, v, got, truth))
    return result


@dataclass
class FellowTravellerReport:
    max_length: int
    cases: int = 0
    max_left: int = 0
    max_right: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def fellow_traveller_report(table: HypercubeTable, max_length: int, h=None) -> FellowTravellerReport:
    """Check both directed fellow traveller properties with bound 2 over ``H``.

    For every element ``a`` with ``|a| <= max_length`` and non-trivial cube ``c``,
    the length-``t`` suffixes of ``N(a)`` and ``N(c·a)`` are within left directed
    distance 1, and the length-``t`` prefixes of ``N(a)`` and ``N(a·c)`` within
    right directed distance 1, for every ``t >= 1``.  ``h`` overrides the
    maximal-hypercube map (used to build negative controls).
    """
    m = table.monoid
    report = FellowTravellerReport(max_length)
    for a in m.elements_up_to(max_length):
        u = normalize_oracle(table, a, h)
        for cube in table.nontrivial:
            report.cases += 1
            v = normalize_oracle(table, m.product(cube.element, a), h)
            for t in range(1, max(len(u), len(v)) + 1):
                d = bounded_distance_left(table, product(table, u[-t:]), product(table, v[-t:]))
                report.max_left = max(report.max_left, d)
                if d >= AT_LEAST_TWO:
                    report.violations.append(("left", a.word, cube.id, t))
            v = normalize_oracle(table, m.product(a, cube.element), h)
            for t in range(1, max(len(u), len(v)) + 1):
                d = bounded_distance_right(table, product(table, u[:t]), product(table, v[:t]))
                report.max_right = max(report.max_right, d)
                if d >= AT_LEAST_TWO:
                    report.violations.append(("right", a.word, cube.id, t))
    return report


# -- serialization -----------------------------------------------------------

def _fmt_word(gens, word):
    if not word:
        return "1"
    return ".".join(gens[i] for i in word)


def _parse_word(gens, text, lineno):
    if text == "1":
        return ()
    try:
        return tuple(gens.index(t) for t in text.split("."))
    except ValueError:
        raise MachineFormatError(f"unknown generator in {text!r}", lineno) from None


def _state_text(gens, label):
    if label == DEAD:
        return DEAD
    if len(label) == 2:
        return "pair=" + _fmt_word(gens, label[0]) + "," + _fmt_word(gens, label[1])
    raise ValueError("only plain difference machines serialize")


def serialize_pair_automaton(machine: PairAutomaton) -> str:
    gens = machine.generators
    letters = sorted({c for col in machine.alphabet for c in col if c != PAD})
    lines = [HEADER, "pair-alphabet: " + " ".join(map(str, letters)) + f" {PAD}",
             "generators: " + " ".join(gens), f"padding: {machine.padding}",
             f"multiplication: {machine.multiplication} {machine.cube}",
             f"states: {len(machine.states)}"]
    for q, label in enumerate(machine.states):
        acc = " accepting" if q in machine.accepting else ""
        lines.append(f"state {q} {_state_text(gens, label)}{acc}")
    lines.append(f"initial: {machine.initial}")
    for q in range(len(machine.states)):
        for col in machine.alphabet:
            lines.append(f"{q} {col[0]},{col[1]} -> {machine.delta[q, col]}")
    return "\n".join(lines) + "\n"


def deserialize_pair_automaton(text: str) -> PairAutomaton:
    lines = [(n, line.strip()) for n, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not lines or lines[0][1] != HEADER:
        raise MachineFormatError(f"missing header {HEADER!r}", 1)
    fields = {}
    pos = 1
    for key in ("pair-alphabet:", "generators:", "padding:", "multiplication:", "states:"):
        lineno, line = lines[pos]
        if not line.startswith(key):
            raise MachineFormatError(f"expected {key!r}", lineno)
        fields[key] = line[len(key):].strip()
        pos += 1
    letters = [PAD if t == PAD else int(t) for t in fields["pair-alphabet:"].split()]
    gens = tuple(fields["generators:"].split())
    mult, cube = fields["multiplication:"].split()
    count = int(fields["states:"])
    states, accepting = [], set()
    for q in range(count):
        lineno, line = lines[pos + q]
        parts = line.split()
        if len(parts) < 3 or parts[0] != "state" or parts[1] != str(q):
            raise MachineFormatError(f"expected 'state {q} ...'", lineno)
        if parts[2] == DEAD:
            states.append(DEAD)
        elif parts[2].startswith("pair="):
            a, _, b = parts[2][5:].partition(",")
            states.append((_parse_word(gens, a, lineno), _parse_word(gens, b, lineno)))
        else:
            raise MachineFormatError("bad state descriptor", lineno)
        if parts[3:] == ["accepting"]:
            accepting.add(q)
    pos += count
    lineno, line = lines[pos]
    if not line.startswith("initial:"):
        raise MachineFormatError("expected 'initial:'", lineno)
    initial = int(line[len("initial:"):])
    alphabet = tuple((a, b) for a in letters for b in letters if (a, b) != (PAD, PAD))
    delta = {}
    for lineno, line in lines[pos + 1:]:
        head, arrow, target = line.partition("->")
        parts = head.split()
        if not arrow or len(parts) != 2:
            raise MachineFormatError("expected '<from> <a>,<b> -> <to>'", lineno)
        a, _, b = parts[1].partition(",")
        col = tuple(PAD if t == PAD else int(t) for t in (a, b))
        delta[int(parts[0]), col] = int(target)
    if len(delta) != count * len(alphabet):
        raise MachineFormatError("partial transition function")
    return PairAutomaton(fields["padding:"], mult, int(cube), gens, alphabet, tuple(states),
                         initial, frozenset(accepting), delta)


def pair_automaton_to_dot(machine: PairAutomaton, table: HypercubeTable | None = None) -> str:
    """DOT rendering; transitions into the dead state are omitted for legibility."""
    gens = machine.generators

    def name(c):
        if c == PAD:
            return PAD
        return table.name(c) if table is not None else str(c)

    lines = ["digraph multiplier {", "  rankdir=LR;", '  start [shape=point, label=""];']
    for q, label in enumerate(machine.states):
        shape = "doublecircle" if q in machine.accepting else "circle"
        text = DEAD if label == DEAD else f"({_fmt_word(gens, label[0])}, {_fmt_word(gens, label[1])})"
        lines.append(f'  s{q} [shape={shape}, label="{text}"];')
    lines.append(f"  start -> s{machine.initial};")
    edges: dict[tuple[int, int], list[str]] = {}
    for (q, col), target in machine.delta.items():
        if machine.states[target] == DEAD:
            continue
        edges.setdefault((q, target), []).append(f"{name(col[0])}|{name(col[1])}")
    for (q, target), labels in sorted(edges.items()):
        lines.append(f'  s{q} -> s{target} [label="' + "\\n".join(labels) + '"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
