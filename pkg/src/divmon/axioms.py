"""Decide whether a degree-2 presentation presents a left divisibility monoid.

Conditions checked on the presented monoid, for generators x, y, z, x', y', z':

* I   -- the left divisors of ``xyz`` form a distributive lattice;
* II  -- ``xyz = xy'z'`` or ``yzx = y'z'x`` implies ``yz = y'z'``;
* III -- ``xy = x'y'``, ``xz = x'z'`` and ``y != z`` imply ``x = x'``.

The fourth condition (the monoid is the quotient of the free monoid by the
congruence generated by its length-2 relations) holds by construction for the
presentations this package accepts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .lattice import lattice_is_distributive
from .monoid import Monoid

CONDITION_IV_NOTE = "holds by construction (homogeneous degree-2 presentation)"


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class CheckReport:
    failures: tuple[Violation, ...]
    scanned: dict = field(default_factory=dict)
    condition_iv: str = CONDITION_IV_NOTE

    @property
    def passed(self) -> bool:
        return not self.failures

    def by_condition(self, condition: str) -> list[Violation]:
        return [v for v in self.failures if v.condition == condition]

    def failed_conditions(self) -> list[str]:
        return sorted({v.condition for v in self.failures})


def check_condition_i(m: Monoid) -> list[Violation]:
    fmt = m.presentation.format_word
    out = []
    for triple in itertools.product(range(m.rank), repeat=3):
        lattice = m.divisor_lattice(triple)
        if not lattice.is_lattice:
            out.append(Violation("I", triple, f"divisors of {fmt(triple)} do not form a lattice"))
        elif not lattice_is_distributive(lattice):
            out.append(Violation("I", triple, f"divisor lattice of {fmt(triple)} is not distributive"))
    return out


def check_condition_ii(m: Monoid) -> list[Violation]:
    """Witnesses are ``(side, x, y, z, y', z')`` with side 0 for ``xyz = xy'z'``
    and side 1 for ``yzx = y'z'x``."""
    fmt = m.presentation.format_word
    out = []
    k = m.rank
    pairs = list(itertools.product(range(k), repeat=2))
    for side in (0, 1):
        for x in range(k):
            for (y, z), (y2, z2) in itertools.product(pairs, repeat=2):
                if side == 0:
                    u, v = (x, y, z), (x, y2, z2)
                else:
                    u, v = (y, z, x), (y2, z2, x)
                if m.equal(u, v) and not m.equal((y, z), (y2, z2)):
                    out.append(Violation(
                        "II", (side, x, y, z, y2, z2),
                        f"{fmt(u)} = {fmt(v)} but {fmt((y, z))} != {fmt((y2, z2))}"))
    return out


def check_condition_iii(m: Monoid) -> list[Violation]:
    """Witnesses are ``(x, y, z, x', y', z')``."""
    fmt = m.presentation.format_word
    out = []
    k = m.rank
    for x, x2 in itertools.product(range(k), repeat=2):
        if x == x2:
            continue
        for y, z in itertools.product(range(k), repeat=2):
            if y == z:
                continue
            for y2, z2 in itertools.product(range(k), repeat=2):
                if m.equal((x, y), (x2, y2)) and m.equal((x, z), (x2, z2)):
                    out.append(Violation(
                        "III", (x, y, z, x2, y2, z2),
                        f"{fmt((x, y))} = {fmt((x2, y2))} and {fmt((x, z))} = {fmt((x2, z2))} "
                        f"with {fmt((y,))} != {fmt((z,))}, but {fmt((x,))} != {fmt((x2,))}"))
    return out


def scan_counts(rank: int) -> dict[str, int]:
    """Number of tuples each condition inspects."""
    return {"I": rank**3, "II": 2 * rank**5, "III": rank**5 * (rank - 1)}


def check_all(m: Monoid) -> CheckReport:
    failures = check_condition_i(m) + check_condition_ii(m) + check_condition_iii(m)
    failures.sort(key=lambda v: (v.condition, v.witness))
    return CheckReport(tuple(failures), scan_counts(m.rank))


def replay(m: Monoid, violation: Violation) -> bool:
    """Re-derive a reported violation from monoid primitives alone."""
    w = violation.witness
    if violation.condition == "I":
        lattice = m.divisor_lattice(w)
        return not lattice.is_lattice or not lattice_is_distributive(lattice)
    if violation.condition == "II":
        side, x, y, z, y2, z2 = w
        u, v = ((x, y, z), (x, y2, z2)) if side == 0 else ((y, z, x), (y2, z2, x))
        return m.equal(u, v) and not m.equal((y, z), (y2, z2))
    if violation.condition == "III":
        x, y, z, x2, y2, z2 = w
        return y != z and x != x2 and m.equal((x, y), (x2, y2)) and m.equal((x, z), (x2, z2))
    raise ValueError(f"unknown condition {violation.condition!r}")
