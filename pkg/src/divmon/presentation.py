"""Monoid presentations with length-2 relations.

A presentation file looks like::

    # the monoid <x, y, z : xy = yz>
    generators: x y z
    rel: x y = y z

Words are tuples of generator indices; the empty tuple is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import PresentationSyntaxError

Word = tuple[int, ...]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_SEPARATORS = re.compile(r"[\s.,·]+")


@dataclass(frozen=True)
class Presentation:
    """Generators plus normalized degree-2 relation pairs.

    Relations are stored with ``u <= v`` (lexicographically on index tuples),
    without duplicates or trivial pairs, sorted.
    """

    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not _NAME.match(g):
                raise ValueError(f"invalid generator name {g!r}")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator")
        k = len(gens)
        normalized = set()
        for u, v in self.relations:
            u, v = tuple(u), tuple(v)
            if len(u) != 2 or len(v) != 2:
                raise ValueError("relation sides must have length exactly 2")
            if any(not 0 <= i < k for i in u + v):
                raise ValueError("relation uses an undeclared generator")
            if u != v:
                normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", tuple(sorted(normalized)))

    @classmethod
    def build(cls, generators: str | Sequence[str], relations: Iterable[str] = ()) -> "Presentation":
        """Shorthand constructor: ``Presentation.build("xyz", ["xy=yz"])``."""
        if isinstance(generators, str):
            generators = generators.split() if " " in generators else list(generators)
        gens = tuple(generators)
        probe = cls(gens)
        rels = []
        for text in relations:
            lhs, sep, rhs = text.partition("=")
            if not sep:
                raise ValueError(f"relation {text!r} has no '='")
            rels.append((probe.parse_word(lhs), probe.parse_word(rhs)))
        return cls(gens, tuple(rels))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def parse_word(self, text: str) -> Word:
        """Parse a word written with separators (``x y z``, ``x.y.z``) or, when
        every generator name is a single character, run together (``xyz``).
        ``1`` and the empty string denote the empty word."""
        text = text.strip()
        if text in ("", "1", "ε"):
            return ()
        tokens = [t for t in _SEPARATORS.split(text) if t]
        single = all(len(g) == 1 for g in self.generators)
        out: list[int] = []
        for tok in tokens:
            if tok in self.generators:
                out.append(self.generators.index(tok))
            elif single:
                for ch in tok:
                    out.append(self.index(ch))
            else:
                raise KeyError(f"unknown generator {tok!r}")
        return tuple(out)

    def format_word(self, word: Sequence[int], sep: str | None = None) -> str:
        if not word:
            return "1"
        if sep is None:
            sep = "" if all(len(g) == 1 for g in self.generators) else " "
        return sep.join(self.generators[i] for i in word)

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators)]
        for u, v in self.relations:
            lines.append(f"rel: {self.format_word(u, ' ')} = {self.format_word(v, ' ')}")
        return "\n".join(lines) + "\n"

    def reversed(self) -> "Presentation":
        """The presentation of the antiautomorphic image (all relation words reversed)."""
        return Presentation(self.generators, tuple((u[::-1], v[::-1]) for u, v in self.relations))


def parse_presentation(text: str) -> Presentation:
    """Parse the ``generators:`` / ``rel:`` file format."""
    generators: tuple[str, ...] | None = None
    raw_relations: list[tuple[int, str, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, rest = line.partition(":")
        key = key.strip()
        if not colon:
            raise PresentationSyntaxError("expected 'generators:' or 'rel:'", lineno)
        if key == "generators":
            if generators is not None:
                raise PresentationSyntaxError("generators declared twice", lineno)
            names = rest.split()
            for name in names:
                if not _NAME.match(name):
                    raise PresentationSyntaxError(f"invalid generator name {name!r}", lineno)
            if len(set(names)) != len(names):
                raise PresentationSyntaxError("duplicate generator", lineno)
            generators = tuple(names)
        elif key == "rel":
            lhs, eq, rhs = rest.partition("=")
            if not eq or "=" in rhs:
                raise PresentationSyntaxError("relation must have exactly one '='", lineno)
            raw_relations.append((lineno, lhs, rhs))
        else:
            raise PresentationSyntaxError(f"unknown directive {key!r}", lineno)

    if generators is None:
        raise PresentationSyntaxError("missing 'generators:' line", 0)
    probe = Presentation(generators)
    relations = []
    for lineno, lhs, rhs in raw_relations:
        sides = []
        for side in (lhs, rhs):
            try:
                word = probe.parse_word(side)
            except KeyError as exc:
                raise PresentationSyntaxError(f"undeclared symbol: {exc.args[0]}", lineno) from None
            if len(word) != 2:
                raise PresentationSyntaxError(
                    f"relation side {side.strip()!r} has length {len(word)}, expected 2", lineno)
            sides.append(word)
        relations.append(tuple(sides))
    return Presentation(generators, tuple(relations))


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
