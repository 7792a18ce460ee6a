"""Right normal forms over the hypercube alphabet.

A normal word is a tuple of non-trivial cube ids ``(h_p, ..., h_1)``, most
significant factor first, with ``h_i = h(h_p ... h_i)``.  The empty tuple is the
normal form of the identity.
"""

from __future__ import annotations

import logging
import re
from typing import Sequence

from .exceptions import NotADivisibilityMonoid
from .hypercubes import Hypercube, HypercubeTable
from .monoid import Element, ElementLike

log = logging.getLogger(__name__)

NormalWord = tuple[int, ...]

#: Returned by the bounded distance functions when the distance is at least 2.
AT_LEAST_TWO = 2


def product(table: HypercubeTable, factors: Sequence[int]) -> Element:
    word = ()
    for f in factors:
        word += table[f].element.word
    return table.monoid.element(word)


def normalize_oracle(table: HypercubeTable, a: ElementLike, h=None) -> NormalWord:
    """Greedy right-to-left extraction: peel ``h(a)`` off the right until 1 remains."""
    m = table.monoid
    h = h or table.max_hypercube
    a = m.element(a)
    factors = []
    while not a.is_identity:
        cube = h(a)
        factors.append(cube.id)
        a = m.right_quotient(a, cube.element)
    return tuple(reversed(factors))


def is_normal_pair(table: HypercubeTable, a, b) -> bool:
    a, b = table.find(a), table.find(b)
    if a.is_trivial or b.is_trivial:
        raise ValueError("normal pairs consist of non-trivial hypercubes")
    return table.max_hypercube(table.product(a, b)).id == b.id


def is_normal_word(table: HypercubeTable, factors: Sequence) -> bool:
    cubes = [table.find(f) for f in factors]
    if any(c.is_trivial for c in cubes):
        raise ValueError("normal words consist of non-trivial hypercubes")
    return all(is_normal_pair(table, a, b) for a, b in zip(cubes, cubes[1:]))


def _cube_of(table: HypercubeTable, a: Element, what: str) -> Hypercube:
    cube = table.lookup(a)
    if cube is None:
        raise NotADivisibilityMonoid(f"{what} {table.monoid.format(a)} is not a hypercube")
    return cube


def left_mult_update(table: HypercubeTable, y, factors: NormalWord) -> NormalWord:
    """Normal form of ``y·a`` from the normal form of ``a``.

    Sweeping right to left: ``y_m = y``, ``y_{i-1} = h(y_i h_i)`` and
    ``y_i h_i = h'_i y_{i-1}``; the result is ``h'_m ... h'_1 y_0``.
    """
    m = table.monoid
    carry = table.find(y)
    if carry.is_trivial:
        return tuple(factors)
    out = []
    for i, f in enumerate(factors):
        both = table.product(carry, f)
        nxt = table.max_hypercube(both)
        left = _cube_of(table, m.right_quotient(both, nxt.element), "left factor")
        if left.is_trivial and i > 0:
            log.info("left_mult_update: trivial factor at position %d of %d", i, len(factors))
        out.append(left.id)
        carry = nxt
    out.append(carry.id)
    return tuple(c for c in out if c != 0)


def right_mult_update(table: HypercubeTable, factors: NormalWord, z) -> NormalWord:
    """Normal form of ``a·z`` from the normal form of ``a``.

    Sweeping right to left: ``z_0 = z``, ``h''_i = h(h_i z_{i-1})`` and
    ``z_i h''_i = h_i z_{i-1}``; the result is ``z_m h''_m ... h''_1``.
    """
    m = table.monoid
    carry = table.find(z)
    if carry.is_trivial:
        return tuple(factors)
    out = []
    for i, f in enumerate(reversed(factors)):
        both = table.product(f, carry)
        new = table.max_hypercube(both)
        carry = _cube_of(table, m.right_quotient(both, new.element), "carried factor")
        out.append(new.id)
        if carry.is_trivial:
            out.extend(reversed(factors[:len(factors) - i - 1]))
            break
    else:
        out.append(carry.id)
    return tuple(c for c in reversed(out) if c != 0)


def bounded_distance_left(table: HypercubeTable, a: ElementLike, b: ElementLike) -> int:
    """Left directed distance over the hypercube alphabet, exact up to 1.

    0 if ``a = b``; 1 if ``b = c·a`` or ``a = c·b`` for a non-trivial cube ``c``;
    otherwise :data:`AT_LEAST_TWO`.
    """
    m = table.monoid
    a, b = m.element(a), m.element(b)
    if a == b:
        return 0
    lo, hi = (a, b) if a.length < b.length else (b, a)
    if 0 < hi.length - lo.length <= table.max_length and m.is_right_divisor(lo, hi):
        if table.lookup(m.right_quotient(hi, lo)) is not None:
            return 1
    return AT_LEAST_TWO


def bounded_distance_right(table: HypercubeTable, a: ElementLike, b: ElementLike) -> int:
    """Mirror of :func:`bounded_distance_left`: ``b = a·c`` or ``a = b·c``."""
    m = table.monoid
    a, b = m.element(a), m.element(b)
    if a == b:
        return 0
    lo, hi = (a, b) if a.length < b.length else (b, a)
    if 0 < hi.length - lo.length <= table.max_length and m.is_left_divisor(lo, hi):
        if table.lookup(m.left_quotient(hi, lo)) is not None:
            return 1
    return AT_LEAST_TWO


def render(table: HypercubeTable, factors: Sequence[int]) -> str:
    """``[x y].y.y.[y z]``; generators print bare, the identity prints as ``1``."""
    if not factors:
        return "1"
    return ".".join(table.name(f) for f in factors)


_FACTOR = re.compile(r"\[([^\]]*)\]|([^.\s\[\]]+)")


def parse_normal_word(table: HypercubeTable, text: str) -> NormalWord:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "1":
        return ()
    gens = table.monoid.presentation
    out = []
    pos = 0
    while pos < len(text):
        match = _FACTOR.match(text, pos)
        if not match:
            raise ValueError(f"cannot parse normal word at {text[pos:]!r}")
        names = match.group(1).split() if match.group(1) is not None else [match.group(2)]
        atoms = tuple(sorted(gens.index(n) for n in names))
        if atoms not in table.by_atoms:
            raise ValueError(f"no hypercube with atoms {names}")
        out.append(table.by_atoms[atoms])
        pos = match.end()
        if pos < len(text):
            if text[pos] != ".":
                raise ValueError(f"expected '.' at {text[pos:]!r}")
            pos += 1
    return tuple(out)


def factorizations(table: HypercubeTable, a: ElementLike) -> list[NormalWord]:
    """Every way of writing ``a`` as a product of non-trivial cubes (exponential)."""
    m = table.monoid
    a = m.element(a)
    if a.is_identity:
        return [()]
    out = []
    for cube in table.nontrivial:
        if cube.length <= a.length and m.is_right_divisor(cube.element, a):
            rest = m.right_quotient(a, cube.element)
            out.extend(f + (cube.id,) for f in factorizations(table, rest))
    return out

