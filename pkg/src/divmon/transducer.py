"""The finite transducer computing right normal forms.

States are the hypercubes.  Reading generator ``x`` in state ``a`` moves to
``b = h(a·x)`` and outputs a word ``u`` with ``a·x = u·b``.  After one run over a
word ``w`` the final state is the rightmost factor of ``N(w)`` and the output is
what remains to be normalized, so ``N(w) = N(λ(w)) · τ(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .exceptions import DivmonError, MachineFormatError
from .hypercubes import HypercubeTable
from .normal_form import NormalWord

HEADER = "divmon-transducer v1"
BASE = "base"
AUGMENTED = "augmented"


@dataclass(frozen=True)
class Transducer:
    """A total deterministic transducer whose states are all accepting.

    ``delta`` and ``output`` map ``(state, letter)`` to the next state and to
    the emitted tuple.  Letters and outputs are generator indices for a base
    machine and cube ids for an augmented one.
    """

    kind: str
    generators: tuple[str, ...]
    states: tuple[tuple[int, ...], ...]
    initial: int
    delta: dict = field(compare=True)
    output: dict = field(compare=True)

    def __post_init__(self):
        if self.kind not in (BASE, AUGMENTED):
            raise ValueError(f"unknown transducer kind {self.kind!r}")

    @property
    def letters(self) -> range:
        return range(len(self.generators) if self.kind == BASE else len(self.states))

    @property
    def n_arrows(self) -> int:
        return len(self.delta)

    def arrows(self):
        """``(source, letter, target, output)`` in (state, letter) order."""
        for q in range(len(self.states)):
            for x in self.letters:
                yield q, x, self.delta[q, x], self.output[q, x]

    def state_name(self, q: int) -> str:
        atoms = self.states[q]
        if not atoms:
            return "1"
        if len(atoms) == 1:
            return self.generators[atoms[0]]
        return "[" + " ".join(self.generators[i] for i in atoms) + "]"

    def letter_name(self, x: int) -> str:
        return self.generators[x] if self.kind == BASE else self.state_name(x)

    def output_name(self, out: Sequence[int]) -> str:
        if not out:
            return "ε"
        if self.kind == BASE:
            sep = "" if all(len(g) == 1 for g in self.generators) else " "
            return sep.join(self.generators[i] for i in out)
        return ".".join(self.state_name(k) for k in out)


class Normalization(NamedTuple):
    factors: NormalWord
    runs: int
    steps: int


def synthesize(table: HypercubeTable) -> Transducer:
    """Arrow ``a --x|u--> h(a·x)`` for every cube ``a`` and generator ``x``, with
    ``u`` the least word such that ``a·x = u·h(a·x)``."""
    m = table.monoid
    delta, output = {}, {}
    for cube in table:
        for x in range(m.rank):
            both = m.element(cube.element.word + (x,))
            target = table.max_hypercube(both)
            delta[cube.id, x] = target.id
            output[cube.id, x] = m.right_quotient(both, target.element).word
    machine = Transducer(BASE, m.presentation.generators, tuple(c.atoms for c in table), 0, delta, output)
    check_coherence(machine, table)
    return machine


def synthesize_augmented(table: HypercubeTable) -> Transducer:
    """Arrow ``a --c|k--> h(a·c)`` for every pair of cubes, with ``a·c = k·h(a·c)``."""
    m = table.monoid
    delta, output = {}, {}
    for cube in table:
        for letter in table:
            both = m.product(cube.element, letter.element)
            target = table.max_hypercube(both)
            rest = table.lookup(m.right_quotient(both, target.element))
            if rest is None:
                raise DivmonError(
                    f"{table.name(cube)}·{table.name(letter)} does not split into two hypercubes")
            delta[cube.id, letter.id] = target.id
            output[cube.id, letter.id] = () if rest.is_trivial else (rest.id,)
    machine = Transducer(AUGMENTED, m.presentation.generators, tuple(c.atoms for c in table), 0, delta, output)
    check_coherence(machine, table)
    return machine


def check_coherence(machine: Transducer, table: HypercubeTable) -> None:
    """Assert ``rep(a)·x = u·rep(b)`` for every arrow ``a --x|u--> b``."""
    m = table.monoid

    def word_of(letters):
        if machine.kind == BASE:
            return tuple(letters)
        return sum((table[k].element.word for k in letters), ())

    for q, x, target, out in machine.arrows():
        lhs = table[q].element.word + word_of((x,))
        rhs = word_of(out) + table[target].element.word
        if not m.equal(lhs, rhs):
            raise DivmonError(f"incoherent arrow {machine.state_name(q)} --{machine.letter_name(x)}--> "
                              f"{machine.state_name(target)}")


def run(machine: Transducer, word: Sequence[int], state: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Read ``word`` from ``state`` (the initial state by default); return the
    final state and the concatenated outputs."""
    q = machine.initial if state is None else state
    delta, output = machine.delta, machine.output
    out: list[int] = []
    for x in word:
        try:
            out.extend(output[q, x])
            q = delta[q, x]
        except KeyError:
            raise ValueError(f"letter {x!r} is not in the input alphabet") from None
    return q, tuple(out)


def normalize_fast(machine: Transducer, word: Sequence[int]) -> Normalization:
    """Iterate runs until the word is exhausted.

    Each run reads the whole remaining word and produces one factor, so a
    word of length ``n`` over the generators costs at most ``n(n+1)/2`` steps.
    """
    factors = []
    runs = steps = 0
    w = tuple(word)
    while w:
        q, out = run(machine, w)
        runs += 1
        steps += len(w)
        if q == machine.initial:
            raise DivmonError("a non-empty word ended in the initial state")
        factors.append(q)
        w = out
    return Normalization(tuple(reversed(factors)), runs, steps)


# -- serialization -----------------------------------------------------------

def serialize(machine: Transducer) -> str:
    gens = machine.generators
    lines = [HEADER, f"alphabet: {machine.kind}", "generators: " + " ".join(gens),
             f"states: {len(machine.states)}"]
    for q, atoms in enumerate(machine.states):
        lines.append(f"state {q} atoms=" + ",".join(gens[i] for i in atoms))
    lines.append(f"initial: {machine.initial}")

    def letter(x):
        return gens[x] if machine.kind == BASE else str(x)

    for q, x, target, out in machine.arrows():
        lines.append(f"{q} {letter(x)} -> {target} | " + " ".join(letter(y) for y in out))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _expect(lines, i, prefix):
    if i >= len(lines):
        raise MachineFormatError(f"unexpected end of input, expected {prefix!r}", i + 1)
    lineno, text = lines[i]
    if not text.startswith(prefix):
        raise MachineFormatError(f"expected {prefix!r}", lineno)
    return lineno, text[len(prefix):].strip()


def deserialize(text: str) -> Transducer:
    lines = [(n, line.strip()) for n, line in enumerate(text.splitlines(), 1)
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines or lines[0][1] != HEADER:
        raise MachineFormatError(f"missing header {HEADER!r}", lines[0][0] if lines else 1)
    lineno, kind = _expect(lines, 1, "alphabet:")
    if kind not in (BASE, AUGMENTED):
        raise MachineFormatError(f"unknown alphabet {kind!r}", lineno)
    _, gen_text = _expect(lines, 2, "generators:")
    gens = tuple(gen_text.split())
    lineno, count_text = _expect(lines, 3, "states:")
    try:
        count = int(count_text)
    except ValueError:
        raise MachineFormatError("state count is not an integer", lineno) from None
    states = []
    for q in range(count):
        lineno, rest = _expect(lines, 4 + q, "state ")
        ident, _, atoms_text = rest.partition(" atoms=")
        if ident.strip() != str(q) or not _:
            raise MachineFormatError(f"expected 'state {q} atoms=...'", lineno)
        try:
            atoms = tuple(gens.index(a) for a in atoms_text.split(",") if a)
        except ValueError:
            raise MachineFormatError(f"unknown generator in {atoms_text!r}", lineno) from None
        states.append(atoms)
    lineno, init_text = _expect(lines, 4 + count, "initial:")
    try:
        initial = int(init_text)
    except ValueError:
        raise MachineFormatError("initial state is not an integer", lineno) from None

    n_letters = len(gens) if kind == BASE else count

    def letter(tok, lineno):
        try:
            x = gens.index(tok) if kind == BASE else int(tok)
        except ValueError:
            raise MachineFormatError(f"unknown letter {tok!r}", lineno) from None
        if not 0 <= x < n_letters:
            raise MachineFormatError(f"letter {tok!r} out of range", lineno)
        return x

    delta, output = {}, {}
    for lineno, body in lines[5 + count:]:
        head, arrow, tail = body.partition("->")
        target_text, bar, out_text = tail.partition("|")
        parts = head.split()
        if not arrow or not bar or len(parts) != 2:
            raise MachineFormatError("expected '<from> <letter> -> <to> | <output>'", lineno)
        try:
            source, target = int(parts[0]), int(target_text)
        except ValueError:
            raise MachineFormatError("state ids must be integers", lineno) from None
        if not (0 <= source < count and 0 <= target < count):
            raise MachineFormatError("state id out of range", lineno)
        x = letter(parts[1], lineno)
        if (source, x) in delta:
            raise MachineFormatError("duplicate transition", lineno)
        delta[source, x] = target
        output[source, x] = tuple(letter(tok, lineno) for tok in out_text.split())
    if len(delta) != count * n_letters:
        raise MachineFormatError("partial transition function")
    return Transducer(kind, gens, tuple(states), initial, delta, output)


def export_dot(machine: Transducer) -> str:
    def quote(s):
        return '"' + s.replace('"', r'\"') + '"'

    lines = ["digraph transducer {", "  rankdir=LR;", '  start [shape=point, label=""];']
    for q in range(len(machine.states)):
        lines.append(f"  q{q} [shape=doublecircle, label={quote(machine.state_name(q))}];")
    lines.append(f"  start -> q{machine.initial};")
    for q, x, target, out in machine.arrows():
        label = f"{machine.letter_name(x)}|{machine.output_name(out)}"
        lines.append(f"  q{q} -> q{target} [label={quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
