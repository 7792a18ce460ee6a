"""Command-line interface: ``divmon <command> FILE ...``.

Exit codes: 0 success, 1 domain failure (axiom check or verification failed),
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import automatic as auto
from .axioms import check_all
from .exceptions import DivmonError, MachineFormatError, PresentationSyntaxError
from .hypercubes import (HypercubeTable, enumerate_hypercubes, graph_to_dot, hypercube_graph, reachable,
                         strongly_connected)
from .monoid import DEFAULT_CLASS_CAP, DEFAULT_MAX_LENGTH, Monoid
from .normal_form import render
from .presentation import parse_presentation
from .report import render_document
from .transducer import (HEADER as MACHINE_HEADER, Transducer, deserialize, export_dot, normalize_fast,
                         serialize, synthesize, synthesize_augmented)
from .verify import SUITE, run_suite

OK, FAILED, USAGE = 0, 1, 2


@dataclass
class CommandOutcome:
    exit_code: int
    text: str
    document: dict = field(default_factory=dict)
    format: str = "text"


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _monoid(args) -> Monoid:
    text = _read(args.file)
    if text.lstrip().startswith(MACHINE_HEADER):
        raise _Usage(f"{args.file} is a transducer file; this command needs a presentation")
    try:
        p = parse_presentation(text)
    except PresentationSyntaxError as exc:
        raise _Usage(f"{args.file}: {exc}") from None
    return Monoid(p, class_cap=args.class_cap, max_length=args.max_length)


def _checked(args) -> tuple[Monoid, Optional[CommandOutcome]]:
    m = _monoid(args)
    if args.assume_checked:
        return m, None
    report = check_all(m)
    if report.passed:
        return m, None
    failed = ", ".join(report.failed_conditions())
    return m, CommandOutcome(FAILED, f"not a left divisibility monoid: condition(s) {failed} fail",
                             {"passed": False, "failed_conditions": report.failed_conditions()})


def _cube_arg(table: HypercubeTable, text: str):
    """Resolve ``x``, ``[x y]``, ``x,y`` or ``1`` to a hypercube."""
    text = text.strip()
    if text == "1":
        return table.trivial
    try:
        atoms = table.monoid.presentation.parse_word(text.strip("[]{}").replace(",", " "))
        return table.find(set(atoms))
    except KeyError as exc:
        raise _Usage(str(exc.args[0])) from None


def _word_arg(m: Monoid, text: str):
    try:
        return m.presentation.parse_word(text)
    except KeyError as exc:
        raise _Usage(str(exc.args[0])) from None


# -- commands ----------------------------------------------------------------

def cmd_check(args) -> CommandOutcome:
    m = _monoid(args)
    report = check_all(m)
    lines = []
    doc = {"passed": report.passed, "generators": m.rank, "relations": len(m.presentation.relations)}
    for cond in ("I", "II", "III"):
        found = report.by_condition(cond)
        verdict = "ok" if not found else f"FAILED ({len(found)} violations)"
        lines.append(f"condition {cond}: {verdict} [{report.scanned[cond]} tuples scanned]")
        for v in found[:10]:
            lines.append(f"    {v.detail}")
        doc[f"condition_{cond}"] = "ok" if not found else "failed"
        doc[f"condition_{cond}_violations"] = len(found)
        doc[f"condition_{cond}_scanned"] = report.scanned[cond]
        if found:
            doc[f"condition_{cond}_witness"] = m.presentation.format_word(found[0].witness, " ")
    lines.append(f"condition IV: {report.condition_iv}")
    lines.append("left divisibility monoid: " + ("yes" if report.passed else "no"))
    return CommandOutcome(OK if report.passed else FAILED, "\n".join(lines), doc)


def cmd_hypercubes(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    table = enumerate_hypercubes(m)
    lines = [f"{len(table)} hypercubes"]
    doc = {"hypercubes": len(table)}
    for c in table:
        lines.append(f"  {c.id}: {table.name(c):<10} length {c.length}  word {m.format(c.element)}")
        doc[f"cube_{c.id}"] = f"{table.name(c)} {m.format(c.element)}"
    return CommandOutcome(OK, "\n".join(lines), doc)


def _write(path: Optional[str], text: str) -> None:
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _Usage(f"cannot write {path}: {exc.strerror}") from None


def cmd_synthesize(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    table = enumerate_hypercubes(m)
    machine = synthesize_augmented(table) if args.augmented else synthesize(table)
    body = export_dot(machine) if args.dot else serialize(machine)
    doc = {"kind": machine.kind, "states": len(machine.states), "arrows": machine.n_arrows}
    if args.output:
        _write(args.output, body)
        doc["output"] = args.output
        text = f"{machine.kind} transducer: {len(machine.states)} states, {machine.n_arrows} arrows -> {args.output}"
    else:
        text = body.rstrip("\n")
    return CommandOutcome(OK, text, doc)


def cmd_normalize(args) -> CommandOutcome:
    text = _read(args.file)
    if text.lstrip().startswith(MACHINE_HEADER):
        try:
            machine = deserialize(text)
        except MachineFormatError as exc:
            raise _Usage(f"{args.file}: {exc}") from None
    else:
        m, failed = _checked(args)
        if failed:
            return failed
        machine = synthesize(enumerate_hypercubes(m))
    gens = machine.generators
    word = []
    probe = parse_presentation("generators: " + " ".join(gens))
    try:
        word = list(probe.parse_word(args.word))
    except KeyError as exc:
        raise _Usage(str(exc.args[0])) from None
    if machine.kind == "augmented":
        cube_of = {atoms: q for q, atoms in enumerate(machine.states)}
        word = [cube_of[(x,)] for x in word]
    t0 = time.perf_counter()
    result = normalize_fast(machine, word)
    elapsed = time.perf_counter() - t0
    rendered = ".".join(machine.state_name(q) for q in result.factors) or "1"
    doc = {"word": args.word or "1", "normal_form": rendered, "factors": len(result.factors),
           "runs": result.runs, "steps": result.steps}
    lines = [rendered]
    if args.stats:
        lines.append(f"runs: {result.runs}  steps: {result.steps}  length: {len(word)}  "
                     f"time: {elapsed * 1e3:.3f} ms")
    return CommandOutcome(OK, "\n".join(lines), doc)


def cmd_equal(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    table = enumerate_hypercubes(m)
    machine = synthesize(table)
    u, v = _word_arg(m, args.word1), _word_arg(m, args.word2)
    nu, nv = normalize_fast(machine, u).factors, normalize_fast(machine, v).factors
    same = nu == nv
    text = (f"{render(table, nu)}\n{render(table, nv)}\n" + ("equal" if same else "not equal"))
    return CommandOutcome(OK, text, {"equal": same, "normal_form_1": render(table, nu),
                                     "normal_form_2": render(table, nv)})


def cmd_graph(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    table = enumerate_hypercubes(m)
    graph = hypercube_graph(table)
    doc = {"vertices": len(graph.vertices), "edges": len(graph.edges)}
    lines = []
    if args.reach:
        a, b = (_cube_arg(table, t) for t in args.reach)
        if a.is_trivial or b.is_trivial:
            raise _Usage("the graph has no vertex for the trivial cube")
        ok = reachable(graph, a.id, b.id)
        doc["reachable"] = ok
        lines.append(f"{table.name(a)} -> {table.name(b)}: " + ("reachable" if ok else "not reachable"))
    if args.scc:
        central = set() if args.include_central else set(graph.central())
        nodes = [v for v in graph.vertices if v not in central]
        ok = strongly_connected(graph, nodes)
        doc["strongly_connected"] = ok
        doc["scc_vertices"] = [table.name(v) for v in nodes]
        lines.append(f"strongly connected on {len(nodes)} cubes: " + ("yes" if ok else "no"))
    if args.dot:
        body = graph_to_dot(graph)
        if args.output:
            _write(args.output, body)
        else:
            lines.append(body.rstrip("\n"))
    if not lines:
        for a, b in sorted(graph.edges):
            lines.append(f"{table.name(a)} -> {table.name(b)}")
    return CommandOutcome(OK, "\n".join(lines), doc)


def cmd_automatic(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    table = enumerate_hypercubes(m)
    cubes = [_cube_arg(table, args.multiplier)] if args.multiplier else list(table)
    sides = [args.side] if args.side else ["right", "left"]
    words = auto.normal_words(table, args.sweep) if args.sweep else None
    lines, doc = [], {"hypercubes": len(table)}
    exit_code = OK
    dots = []
    for cube in cubes:
        for side in sides:
            if side == "right":
                machine = auto.right_multiplier_automaton(table, cube.id, args.padding or "left")
            else:
                machine = auto.left_multiplier_automaton(table, cube.id, args.padding or "right")
            kind = "equality" if cube.is_trivial else f"{side}-multiplier"
            key = f"{side}_{cube.id}"
            line = f"{kind} {table.name(cube)} ({machine.padding}-padded): {len(machine.states)} states"
            doc[f"{key}_states"] = len(machine.states)
            if side == "right" and machine.padding == "left" and len(machine.states) > len(table) + 2:
                exit_code = FAILED
                line += f"  EXCEEDS |H|+2 = {len(table) + 2}"
            if words is not None:
                res = auto.check_language(machine, table, args.sweep, words)
                doc[f"{key}_sweep_mismatches"] = len(res.mismatches)
                line += f"; sweep L={args.sweep}: {res.pairs} pairs, {len(res.mismatches)} mismatches"
                if res.mismatches:
                    exit_code = FAILED
            lines.append(line)
            if args.dot:
                dots.append(auto.pair_automaton_to_dot(machine, table))
    if dots:
        body = "".join(dots)
        if args.output:
            _write(args.output, body)
        else:
            lines.append(body.rstrip("\n"))
    doc["ok"] = exit_code == OK
    return CommandOutcome(exit_code, "\n".join(lines), doc)


def cmd_verify(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    table = enumerate_hypercubes(m)
    machine: Optional[Transducer] = None
    if args.machine:
        try:
            machine = deserialize(_read(args.machine))
        except MachineFormatError as exc:
            raise _Usage(f"{args.machine}: {exc}") from None
        if machine.kind != "base" or len(machine.states) != len(table):
            return CommandOutcome(FAILED, "machine does not match the presentation", {"ok": False})
    results = run_suite(table, args.max_len, machine, SUITE, jobs=args.jobs)
    lines, doc = [], {"max_len": args.max_len}
    for res in results:
        status = "ok" if res.ok else f"FAILED ({len(res.failures)} failures, first {res.failures[0]})"
        lines.append(f"{res.name:<17} {res.cases:>7} cases  {status}")
        doc[f"{res.name}_cases"] = res.cases
        doc[f"{res.name}_ok"] = res.ok
    ok = all(r.ok for r in results)
    doc["ok"] = ok
    lines.append("all properties hold" if ok else "verification FAILED")
    return CommandOutcome(OK if ok else FAILED, "\n".join(lines), doc)


def bench_sizes(max_n: int) -> list[int]:
    sizes, n = [], 1
    while n <= max_n:
        sizes.append(n)
        n *= 2
    return sizes


def cmd_bench(args) -> CommandOutcome:
    m, failed = _checked(args)
    if failed:
        return failed
    machine = synthesize(enumerate_hypercubes(m))
    rng = random.Random(args.seed)
    families = {"power": lambda n: [0] * n,
                "random": lambda n: [rng.randrange(m.rank) for _ in range(n)]}
    lines = [f"{'family':<8} {'n':>6} {'runs':>6} {'steps':>9} {'bound':>9} {'ratio':>6} {'ms':>8}"]
    doc = {}
    ok = True
    empty = normalize_fast(machine, []).steps
    doc["steps_empty"] = empty
    ok &= empty == 0
    for name, make in families.items():
        prev = None
        for n in bench_sizes(args.max_n):
            word = make(n)
            t0 = time.perf_counter()
            res = normalize_fast(machine, word)
            ms = (time.perf_counter() - t0) * 1e3
            bound = n * (n + 1) // 2
            ratio = res.steps / prev if prev else float("nan")
            ok &= res.steps <= bound
            if prev is not None:
                ok &= res.steps >= prev
                if n >= 128:
                    ok &= ratio <= 4.5
            lines.append(f"{name:<8} {n:>6} {res.runs:>6} {res.steps:>9} {bound:>9} {ratio:>6.2f} {ms:>8.2f}")
            doc[f"{name}_{n}_steps"] = res.steps
            doc[f"{name}_{n}_ms"] = round(ms, 3)
            prev = res.steps
    doc["ok"] = ok
    lines.append("quadratic bound holds" if ok else "quadratic bound VIOLATED")
    return CommandOutcome(OK if ok else FAILED, "\n".join(lines), doc)


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "kv"], default="text",
                        help="human-readable text or key = value report")
    common.add_argument("--assume-checked", action="store_true",
                        help="skip the divisibility-monoid axiom check")
    common.add_argument("--class-cap", type=int, default=DEFAULT_CLASS_CAP)
    common.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH,
                        help="longest word the brute-force oracle accepts")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="divmon", description="Right normal forms and transducers "
                                     "for left divisibility monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check the divisibility-monoid axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hypercubes", parents=[common], help="list the hypercubes")
    p.add_argument("file")
    p.set_defaults(func=cmd_hypercubes)

    p = sub.add_parser("synthesize", parents=[common], help="build the normal-form transducer")
    p.add_argument("file")
    p.add_argument("--augmented", action="store_true", help="read words over the hypercube alphabet")
    p.add_argument("--dot", action="store_true", help="emit Graphviz instead of the machine format")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("normalize", parents=[common], help="right normal form of a word")
    p.add_argument("file", help="presentation or transducer file")
    p.add_argument("word")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", parents=[common], help="decide whether two words are equal")
    p.add_argument("file")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("graph", parents=[common], help="graph of hypercubes")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--reach", nargs=2, metavar=("FROM", "TO"))
    p.add_argument("--scc", action="store_true", help="test strong connectivity")
    p.add_argument("--include-central", action="store_true",
                   help="keep the identity and all-generator cubes in --scc")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("automatic", parents=[common], help="equality recognizer and multiplier automata")
    p.add_argument("file")
    p.add_argument("--multiplier", metavar="CUBE", help="one cube, e.g. x, '[x y]' or 1")
    p.add_argument("--side", choices=["left", "right"])
    p.add_argument("--padding", choices=["left", "right"])
    p.add_argument("--sweep", type=int, default=0, metavar="L",
                   help="compare with the oracle on all normal pairs of length <= L")
    p.add_argument("--dot", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_automatic)

    p = sub.add_parser("verify", parents=[common], help="run the property suite")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--machine", help="verify this transducer file instead of a fresh one")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="step counts of normalization")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=512)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def run_command(argv) -> CommandOutcome:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandOutcome(USAGE if exc.code else OK, "")
    try:
        outcome = args.func(args)
    except _Usage as exc:
        outcome = CommandOutcome(USAGE, f"error: {exc}")
    except DivmonError as exc:
        outcome = CommandOutcome(FAILED, f"error: {exc}")
    outcome.format = args.format
    return outcome


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    outcome = run_command(argv)
    if outcome.format == "kv" and outcome.document:
        sys.stdout.write(render_document({"exit_code": outcome.exit_code, **outcome.document}))
    elif outcome.text:
        stream = sys.stderr if outcome.exit_code == USAGE else sys.stdout
        print(outcome.text, file=stream)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
