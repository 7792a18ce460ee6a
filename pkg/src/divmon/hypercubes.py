"""Hypercubes, the maximal right-dividing hypercube map, and the graph of hypercubes.

A hypercube is the right lcm of a set of generators (the empty set giving the
identity).  Every element ``a`` is right-divided by a unique maximal hypercube
``h(a)``; the right normal form and the transducer are both built from ``h``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

import networkx as nx

from .exceptions import DivmonError, NotADivisibilityMonoid
from .monoid import Element, ElementLike, Monoid


@dataclass(frozen=True)
class Hypercube:
    id: int
    atoms: tuple[int, ...]
    element: Element

    @property
    def length(self) -> int:
        return len(self.atoms)

    @property
    def is_trivial(self) -> bool:
        return not self.atoms


class HypercubeTable:
    """The finite set of hypercubes of a monoid, indexed by atom set and by element.

    Ids follow (length, atom tuple) order, so id 0 is the identity and ids
    ``1..rank`` are the generators.  ``h(a)`` results are memoized.
    """

    def __init__(self, monoid: Monoid, cubes: Iterable[Hypercube]):
        self.monoid = monoid
        self.cubes = tuple(cubes)
        self.by_atoms = {c.atoms: c.id for c in self.cubes}
        self.by_element = {c.element.word: c.id for c in self.cubes}
        if len(self.by_element) != len(self.cubes):
            raise NotADivisibilityMonoid("distinct generator sets have the same right lcm")
        self._h: dict[tuple, int] = {}

    def __len__(self) -> int:
        return len(self.cubes)

    def __iter__(self) -> Iterator[Hypercube]:
        return iter(self.cubes)

    def __getitem__(self, cube_id: int) -> Hypercube:
        return self.cubes[cube_id]

    @property
    def trivial(self) -> Hypercube:
        return self.cubes[0]

    @property
    def nontrivial(self) -> tuple[Hypercube, ...]:
        return self.cubes[1:]

    @property
    def max_length(self) -> int:
        return max(c.length for c in self.cubes)

    def generator_cube(self, x: int | str) -> Hypercube:
        if isinstance(x, str):
            x = self.monoid.presentation.index(x)
        return self.cubes[self.by_atoms[(x,)]]

    def lookup(self, a: ElementLike) -> Optional[Hypercube]:
        cube_id = self.by_element.get(self.monoid.element(a).word)
        return None if cube_id is None else self.cubes[cube_id]

    def find(self, spec) -> Hypercube:
        """Resolve a cube from an id, a ``Hypercube``, an atom set, or a word/element."""
        if isinstance(spec, Hypercube):
            return spec
        if isinstance(spec, int):
            return self.cubes[spec]
        if isinstance(spec, (set, frozenset)):
            names = self.monoid.presentation
            atoms = tuple(sorted(names.index(a) if isinstance(a, str) else a for a in spec))
            if atoms not in self.by_atoms:
                raise KeyError(f"no hypercube with atoms {sorted(spec)}")
            return self.cubes[self.by_atoms[atoms]]
        cube = self.lookup(spec)
        if cube is None:
            raise KeyError(f"{spec!r} is not a hypercube")
        return cube

    def product(self, *cubes) -> Element:
        return self.monoid.product(*(self.find(c).element for c in cubes))

    def name(self, cube) -> str:
        """``x`` for a generator, ``[x y]`` for a larger cube, ``1`` for the identity."""
        cube = self.find(cube)
        gens = self.monoid.presentation.generators
        if cube.is_trivial:
            return "1"
        if cube.length == 1:
            return gens[cube.atoms[0]]
        return "[" + " ".join(gens[i] for i in cube.atoms) + "]"

    def max_hypercube(self, a: ElementLike) -> Hypercube:
        return max_hypercube(self, a)


def enumerate_hypercubes(m: Monoid) -> HypercubeTable:
    """Collect the right lcm of every generator subset that has one."""
    found = [(0, (), m.one)]
    for size in range(1, m.rank + 1):
        for atoms in itertools.combinations(range(m.rank), size):
            lcm = m.right_lcm([(x,) for x in atoms])
            if lcm is not None:
                if lcm.length != size:
                    raise NotADivisibilityMonoid(f"right lcm of {size} generators has length {lcm.length}")
                found.append((size, atoms, lcm))
    found.sort(key=lambda t: (t[0], t[1]))
    return HypercubeTable(m, (Hypercube(i, atoms, el) for i, (_, atoms, el) in enumerate(found)))


def max_hypercube(table: HypercubeTable, a: ElementLike) -> Hypercube:
    """The unique maximal hypercube right-dividing ``a``.

    With ``X`` the generators right-dividing ``a`` and ``p = |X|``, this is the
    unique right divisor of length ``p`` that every member of ``X`` right-divides.
    """
    m = table.monoid
    a = m.element(a)
    cached = table._h.get(a.word)
    if cached is not None:
        return table.cubes[cached]
    if a.is_identity:
        return table.trivial
    last = {w[-1] for w in m.congruence_class(a.word)}
    p = len(last)
    candidates = sorted(d for d in m.right_divisors(a, p)
                        if last <= {w[-1] for w in m.congruence_class(d.word)})
    if len(candidates) != 1:
        raise NotADivisibilityMonoid(
            f"{m.format(a)} has {len(candidates)} maximal right-dividing hypercube candidates")
    cube = table.lookup(candidates[0])
    if cube is None:
        raise DivmonError(f"maximal right divisor {m.format(candidates[0])} is missing from the hypercube table")
    table._h[a.word] = cube.id
    return cube


@dataclass(frozen=True)
class HypercubeGraph:
    """Edges ``a -> b`` between non-trivial cubes with ``h(ab) = b``."""

    table: HypercubeTable
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(sorted(self.edges))
        return g

    def central(self) -> tuple[int, ...]:
        """Cube ids left out of strong-connectivity queries by default: the
        identity and the cube whose atoms are all generators, if it exists."""
        full = tuple(range(self.table.monoid.rank))
        out = [0]
        if full in self.table.by_atoms and full:
            out.append(self.table.by_atoms[full])
        return tuple(sorted(set(out)))


def hypercube_graph(table: HypercubeTable,
                    h: Callable[[Element], Hypercube] | None = None) -> HypercubeGraph:
    h = h or table.max_hypercube
    vertices = tuple(c.id for c in table.nontrivial)
    edges = frozenset((a, b) for a in vertices for b in vertices
                      if h(table.product(a, b)).id == b)
    return HypercubeGraph(table, vertices, edges)


def reachable(graph: HypercubeGraph, source: int, target: int) -> bool:
    for v in (source, target):
        if v not in graph.vertices:
            raise KeyError(f"unknown vertex {v}")
    return source == target or nx.has_path(graph.digraph(), source, target)


def strongly_connected(graph: HypercubeGraph, restrict_to: Iterable[int] | None = None) -> bool:
    if restrict_to is None:
        skip = set(graph.central())
        restrict_to = [v for v in graph.vertices if v not in skip]
    nodes = list(restrict_to)
    for v in nodes:
        if v not in graph.vertices:
            raise KeyError(f"unknown vertex {v}")
    if not nodes:
        return True
    return nx.is_strongly_connected(graph.digraph().subgraph(nodes))


def graph_to_dot(graph: HypercubeGraph) -> str:
    table = graph.table
    fmt = table.monoid.presentation.format_word
    lines = ["digraph hypercubes {", "  rankdir=LR;"]
    for v in graph.vertices:
        cube = table[v]
        lines.append(f'  c{v} [label="{table.name(cube)}\\n{fmt(cube.element.word)}"];')
    for a, b in sorted(graph.edges):
        lines.append(f"  c{a} -> c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
