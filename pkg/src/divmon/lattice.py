"""Finite posets given by an order table: join/meet tables, distributivity, width."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import networkx as nx


@dataclass(frozen=True)
class DivisorLattice:
    """A finite poset on ``carrier`` with ``leq[i][j]`` meaning ``carrier[i] <= carrier[j]``.

    ``join[i][j]`` / ``meet[i][j]`` hold the index of the least upper / greatest
    lower bound, or ``None`` where it does not exist.
    """

    carrier: tuple[Any, ...]
    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[Optional[int], ...], ...] = field(repr=False)
    meet: tuple[tuple[Optional[int], ...], ...] = field(repr=False)

    @classmethod
    def from_order(cls, carrier: Sequence, leq: Sequence[Sequence[bool]]) -> "DivisorLattice":
        n = len(carrier)
        leq = tuple(tuple(bool(x) for x in row) for row in leq)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("order table must be square and match the carrier")
        join = [[None] * n for _ in range(n)]
        meet = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                ups = [k for k in range(n) if leq[i][k] and leq[j][k]]
                least = [u for u in ups if all(leq[u][v] for v in ups)]
                downs = [k for k in range(n) if leq[k][i] and leq[k][j]]
                greatest = [d for d in downs if all(leq[v][d] for v in downs)]
                join[i][j] = join[j][i] = least[0] if len(least) == 1 else None
                meet[i][j] = meet[j][i] = greatest[0] if len(greatest) == 1 else None
        return cls(tuple(carrier), leq, tuple(map(tuple, join)), tuple(map(tuple, meet)))

    def __len__(self) -> int:
        return len(self.carrier)

    def is_partial_order(self) -> bool:
        n = len(self)
        r = self.leq
        if not all(r[i][i] for i in range(n)):
            return False
        for i, j in itertools.combinations(range(n), 2):
            if r[i][j] and r[j][i]:
                return False
        return all(not (r[i][j] and r[j][k]) or r[i][k]
                   for i in range(n) for j in range(n) for k in range(n))

    @property
    def is_lattice(self) -> bool:
        return all(x is not None for row in self.join for x in row) and \
            all(x is not None for row in self.meet for x in row)

    @property
    def bottom(self) -> Optional[int]:
        n = len(self)
        found = [i for i in range(n) if all(self.leq[i][j] for j in range(n))]
        return found[0] if found else None

    @property
    def top(self) -> Optional[int]:
        n = len(self)
        found = [i for i in range(n) if all(self.leq[j][i] for j in range(n))]
        return found[0] if found else None


def lattice_is_distributive(lattice: DivisorLattice) -> bool:
    """Check ``a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`` over every triple."""
    if not lattice.is_lattice:
        raise ValueError("distributivity is only defined for lattices")
    J, M = lattice.join, lattice.meet
    n = len(lattice)
    return all(M[a][J[b][c]] == J[M[a][b]][M[a][c]]
               for a in range(n) for b in range(n) for c in range(n))


def lattice_width(lattice: DivisorLattice) -> int:
    """Size of a largest antichain.

    By Dilworth's theorem this is ``n`` minus a maximum matching in the
    bipartite graph of strict comparabilities.
    """
    n = len(lattice)
    if n == 0:
        return 0
    graph = nx.Graph()
    left = [("lo", i) for i in range(n)]
    graph.add_nodes_from(left)
    graph.add_nodes_from(("hi", j) for j in range(n))
    graph.add_edges_from((("lo", i), ("hi", j))
                         for i in range(n) for j in range(n) if i != j and lattice.leq[i][j])
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    return n - len(matching) // 2
