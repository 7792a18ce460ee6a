"""Brute-force oracle for the monoid presented by a :class:`Presentation`.

Relations are length preserving, so every congruence class is a finite set of
words of one length and can be enumerated by breadth-first rewriting.  Every
other module is built on (and tested against) the operations here.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .exceptions import NotADivisibilityMonoid, NotADivisor, OracleLimitError
from .presentation import Presentation, Word, parse_presentation

DEFAULT_CLASS_CAP = 10**6
DEFAULT_MAX_LENGTH = 16


@dataclass(frozen=True, order=True)
class Element:
    """A congruence class, represented by its lexicographically least word."""

    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word


ElementLike = Union[Element, Sequence[int], str]


class Monoid:
    """The monoid ``Σ*/∼`` of a degree-2 presentation.

    Congruence classes, prefix and suffix sets are memoized per instance; the
    memo tables are not shared between instances.

    Parameters
    ----------
    presentation : Presentation or str
        A presentation, or presentation-file text.
    class_cap : int
        Largest congruence class the breadth-first closure may build.
    max_length : int
        Longest word the oracle accepts.
    """

    def __init__(self, presentation: Presentation | str, *, class_cap: int = DEFAULT_CLASS_CAP,
                 max_length: int = DEFAULT_MAX_LENGTH):
        if isinstance(presentation, str):
            presentation = parse_presentation(presentation)
        self.presentation = presentation
        self.class_cap = class_cap
        self.max_length = max_length
        self.rank = presentation.rank
        self.one = Element(())

        # Congruence on length-2 words is the equivalence closure of the relation pairs.
        parent: dict[Word, Word] = {}

        def find(w):
            while parent.setdefault(w, w) != w:
                w = parent[w]
            return w

        for u, v in presentation.relations:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[Word, list[Word]] = {}
        for w in list(parent):
            groups.setdefault(find(w), []).append(w)
        self._alternatives: dict[Word, tuple[Word, ...]] = {}
        for members in groups.values():
            for w in members:
                self._alternatives[w] = tuple(sorted(m for m in members if m != w))

        self._canonical: dict[Word, Word] = {}
        self._classes: dict[Word, frozenset[Word]] = {}
        self._prefixes: dict[tuple[Word, int], frozenset[Word]] = {}
        self._suffixes: dict[tuple[Word, int], frozenset[Word]] = {}
        self._by_length: dict[int, tuple[Element, ...]] = {0: (self.one,)}

    def __repr__(self):
        return f"Monoid({self.presentation.to_text().strip()!r})"

    # -- words and elements ------------------------------------------------

    def word(self, w: ElementLike) -> Word:
        if isinstance(w, Element):
            return w.word
        if isinstance(w, str):
            return self.presentation.parse_word(w)
        w = tuple(w)
        if any(not 0 <= i < self.rank for i in w):
            raise ValueError(f"word {w} uses an index outside the generator range")
        return w

    def congruence_class(self, w: ElementLike) -> frozenset[Word]:
        """All words congruent to ``w`` (all of length ``|w|``)."""
        w = self.word(w)
        canon = self._canonical.get(w)
        if canon is not None:
            return self._classes[canon]
        if len(w) > self.max_length:
            raise OracleLimitError(f"word of length {len(w)} exceeds the oracle length cap {self.max_length}")
        seen = {w}
        queue = deque([w])
        alternatives = self._alternatives
        cap = self.class_cap
        while queue:
            cur = queue.popleft()
            for i in range(len(cur) - 1):
                for alt in alternatives.get(cur[i:i + 2], ()):
                    nxt = cur[:i] + alt + cur[i + 2:]
                    if nxt not in seen:
                        seen.add(nxt)
                        if len(seen) > cap:
                            raise OracleLimitError(f"congruence class exceeds the cap of {cap} words")
                        queue.append(nxt)
        cls = frozenset(seen)
        canon = min(cls)
        self._classes[canon] = cls
        for member in cls:
            self._canonical[member] = canon
        return cls

    def element(self, w: ElementLike) -> Element:
        if isinstance(w, Element):
            return w
        w = self.word(w)
        canon = self._canonical.get(w)
        if canon is None:
            self.congruence_class(w)
            canon = self._canonical[w]
        return Element(canon)

    def product(self, *factors: ElementLike) -> Element:
        word: Word = ()
        for f in factors:
            word += self.element(f).word
        return self.element(word)

    def equal(self, u: ElementLike, v: ElementLike) -> bool:
        u, v = self.word(u), self.word(v)
        if len(u) != len(v):
            return False
        return v in self.congruence_class(u)

    def format(self, a: ElementLike) -> str:
        return self.presentation.format_word(self.element(a).word)

    def generator(self, x: int | str) -> Element:
        if isinstance(x, str):
            x = self.presentation.index(x)
        return Element((x,))

    @property
    def generators(self) -> tuple[Element, ...]:
        return tuple(Element((i,)) for i in range(self.rank))

    def elements_of_length(self, n: int) -> tuple[Element, ...]:
        """Every element of length ``n``, sorted by canonical word."""
        if n not in self._by_length:
            shorter = self.elements_of_length(n - 1)
            found = {self.element(e.word + (x,)) for e in shorter for x in range(self.rank)}
            self._by_length[n] = tuple(sorted(found))
        return self._by_length[n]

    def elements_up_to(self, n: int) -> Iterator[Element]:
        for k in range(n + 1):
            yield from self.elements_of_length(k)

    # -- divisibility ----------------------------------------------------

    def _prefix_set(self, a: Element, k: int) -> frozenset[Word]:
        key = (a.word, k)
        got = self._prefixes.get(key)
        if got is None:
            got = frozenset(w[:k] for w in self.congruence_class(a.word))
            self._prefixes[key] = got
        return got

    def _suffix_set(self, a: Element, k: int) -> frozenset[Word]:
        key = (a.word, k)
        got = self._suffixes.get(key)
        if got is None:
            got = frozenset(w[len(w) - k:] for w in self.congruence_class(a.word))
            self._suffixes[key] = got
        return got

    def is_left_divisor(self, b: ElementLike, a: ElementLike) -> bool:
        """True iff ``a = b·d`` for some ``d``."""
        b, a = self.element(b), self.element(a)
        if b.length > a.length:
            return False
        # The prefix set is a union of whole classes, so testing the canonical word suffices.
        return b.word in self._prefix_set(a, b.length)

    def is_right_divisor(self, b: ElementLike, a: ElementLike) -> bool:
        """True iff ``a = d·b`` for some ``d``."""
        b, a = self.element(b), self.element(a)
        if b.length > a.length:
            return False
        return b.word in self._suffix_set(a, b.length)

    def left_divisors(self, a: ElementLike, length: int | None = None) -> set[Element]:
        a = self.element(a)
        lengths = range(a.length + 1) if length is None else [length]
        return {self.element(p) for k in lengths if 0 <= k <= a.length for p in self._prefix_set(a, k)}

    def right_divisors(self, a: ElementLike, length: int | None = None) -> set[Element]:
        a = self.element(a)
        lengths = range(a.length + 1) if length is None else [length]
        return {self.element(s) for k in lengths if 0 <= k <= a.length for s in self._suffix_set(a, k)}

    def right_quotient(self, a: ElementLike, b: ElementLike) -> Element:
        """The ``e`` with ``e·b = a``."""
        a, b = self.element(a), self.element(b)
        if not self.is_right_divisor(b, a):
            raise NotADivisor(f"{self.format(b)} does not right-divide {self.format(a)}")
        k = a.length - b.length
        heads = {w[:k] for w in self.congruence_class(a.word) if w[k:] == b.word}
        head = min(heads)
        if len(heads) != len(self.congruence_class(head)):
            raise NotADivisibilityMonoid(
                f"right cancellation fails: {self.format(a)} / {self.format(b)} is not unique")
        return Element(head)

    def left_quotient(self, a: ElementLike, b: ElementLike) -> Element:
        """The ``d`` with ``b·d = a``."""
        a, b = self.element(a), self.element(b)
        if not self.is_left_divisor(b, a):
            raise NotADivisor(f"{self.format(b)} does not left-divide {self.format(a)}")
        k = b.length
        tails = {w[k:] for w in self.congruence_class(a.word) if w[:k] == b.word}
        tail = min(tails)
        if len(tails) != len(self.congruence_class(tail)):
            raise NotADivisibilityMonoid(
                f"left cancellation fails: {self.format(b)} \\ {self.format(a)} is not unique")
        return Element(tail)

    def right_lcm(self, elements: Iterable[ElementLike], max_length: int | None = None) -> Element | None:
        """Least common right multiple, or ``None`` when none exists within the search bound.

        Lengths are searched upward from the longest input up to the sum of the
        input lengths (capped by ``max_length``).  For a set of ``n`` distinct
        generators only length ``n`` is searched: a join of ``n`` atoms in a
        distributive lattice has height ``n``.
        """
        els = sorted({self.element(e) for e in elements})
        if not els:
            raise ValueError("right_lcm of an empty set")
        els = [e for e in els if not e.is_identity] or [self.one]
        if len(els) == 1:
            return els[0]
        cap = self.max_length if max_length is None else max_length
        if all(e.length == 1 for e in els):
            lo = hi = len(els)
        else:
            lo, hi = max(e.length for e in els), sum(e.length for e in els)
        hi = min(hi, cap)
        seed = max(els, key=lambda e: (e.length, e.word))
        for n in range(lo, hi + 1):
            candidates = {self.element(seed.word + tail)
                          for tail in itertools.product(range(self.rank), repeat=n - seed.length)}
            common = sorted(c for c in candidates if all(self.is_left_divisor(e, c) for e in els))
            if len(common) == 1:
                return common[0]
            if len(common) > 1:
                raise NotADivisibilityMonoid(
                    "no unique right lcm of {" + ", ".join(self.format(e) for e in els) + "}: "
                    + ", ".join(self.format(c) for c in common) + " are all minimal")
        return None

    def left_gcd(self, a: ElementLike, b: ElementLike) -> Element:
        a, b = self.element(a), self.element(b)
        common = self.left_divisors(a) & self.left_divisors(b)
        top = max(c.length for c in common)
        best = sorted(c for c in common if c.length == top)
        if len(best) != 1:
            raise NotADivisibilityMonoid(
                f"no unique left gcd of {self.format(a)} and {self.format(b)}")
        return best[0]

    def divisor_lattice(self, a: ElementLike):
        from .lattice import DivisorLattice

        a = self.element(a)
        carrier = sorted(self.left_divisors(a), key=lambda e: (e.length, e.word))
        leq = [[self.is_left_divisor(c, d) for d in carrier] for c in carrier]
        return DivisorLattice.from_order(carrier, leq)
