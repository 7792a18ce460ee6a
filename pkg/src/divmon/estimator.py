"""scikit-learn style front end.

``fit`` learns everything the transducer needs from a presentation;
``transform`` maps words to right normal forms.

>>> est = RightNormalForm().fit("generators: x y z\\nrel: x x = y z\\nrel: y x = z z\\n")
>>> est.render(est.transform(["yzyxxz"])[0])
'[x y].y.y.[y z]'
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .axioms import check_all
from .exceptions import NotADivisibilityMonoid
from .hypercubes import enumerate_hypercubes
from .monoid import DEFAULT_CLASS_CAP, DEFAULT_MAX_LENGTH, Monoid
from .normal_form import NormalWord, parse_normal_word, product, render
from .presentation import Presentation, Word, load_presentation, parse_presentation
from .transducer import normalize_fast, synthesize, synthesize_augmented


def check_presentation(X) -> Presentation:
    """Accept a :class:`Presentation`, presentation-file text, or a path to one."""
    if isinstance(X, Presentation):
        return X
    if isinstance(X, Monoid):
        return X.presentation
    if isinstance(X, (str, os.PathLike)):
        text = str(X)
        if "generators:" in text:
            return parse_presentation(text)
        return load_presentation(X)
    raise TypeError(f"expected a presentation, its text or a path, got {type(X).__name__}")


def check_words(X: Iterable, presentation: Presentation) -> list[Word]:
    """Coerce strings and index sequences to words, rejecting unknown letters."""
    if isinstance(X, (str, bytes)):
        raise TypeError("expected an iterable of words, got a single string")
    out = []
    for w in X:
        if isinstance(w, str):
            out.append(presentation.parse_word(w))
        else:
            w = tuple(int(i) for i in w)
            if any(not 0 <= i < presentation.rank for i in w):
                raise ValueError(f"word {w} uses an index outside the generator range")
            out.append(w)
    return out


class RightNormalForm(TransformerMixin, BaseEstimator):
    """Right normal forms in a left divisibility monoid.

    Parameters
    ----------
    augmented : bool
        Run the transducer over the hypercube alphabet instead of the generators.
    check : bool
        Refuse presentations that fail the divisibility-monoid axioms.
    class_cap, max_length : int
        Limits of the brute-force oracle used while fitting.

    Attributes
    ----------
    monoid_ : Monoid
    check_report_ : CheckReport or None
    hypercubes_ : HypercubeTable
    transducer_ : Transducer
    n_hypercubes_ : int
    """

    def __init__(self, augmented: bool = False, check: bool = True,
                 class_cap: int = DEFAULT_CLASS_CAP, max_length: int = DEFAULT_MAX_LENGTH):
        self.augmented = augmented
        self.check = check
        self.class_cap = class_cap
        self.max_length = max_length

    def fit(self, X, y=None):
        presentation = check_presentation(X)
        self.monoid_ = Monoid(presentation, class_cap=self.class_cap, max_length=self.max_length)
        self.check_report_ = check_all(self.monoid_) if self.check else None
        if self.check_report_ is not None and not self.check_report_.passed:
            failed = ", ".join(self.check_report_.failed_conditions())
            raise NotADivisibilityMonoid(f"presentation fails condition(s) {failed}")
        self.hypercubes_ = enumerate_hypercubes(self.monoid_)
        build = synthesize_augmented if self.augmented else synthesize
        self.transducer_ = build(self.hypercubes_)
        self.n_hypercubes_ = len(self.hypercubes_)
        return self

    def _letters(self, w: Word) -> Sequence[int]:
        if not self.augmented:
            return w
        return [self.hypercubes_.generator_cube(x).id for x in w]

    def transform(self, X) -> list[NormalWord]:
        check_is_fitted(self, "transducer_")
        words = check_words(X, self.monoid_.presentation)
        return [normalize_fast(self.transducer_, self._letters(w)).factors for w in words]

    def inverse_transform(self, X) -> list[Word]:
        """Canonical (lexicographically least) word of each normal form."""
        check_is_fitted(self, "transducer_")
        out = []
        for nf in X:
            if isinstance(nf, str):
                nf = parse_normal_word(self.hypercubes_, nf)
            out.append(product(self.hypercubes_, nf).word)
        return out

    def predict(self, X) -> list[bool]:
        """Word problem: for each pair ``(u, v)`` decide whether ``u = v`` in the monoid."""
        check_is_fitted(self, "transducer_")
        pairs = list(X)
        left = self.transform([u for u, _ in pairs])
        right = self.transform([v for _, v in pairs])
        return [a == b for a, b in zip(left, right)]

    def render(self, nf: NormalWord) -> str:
        check_is_fitted(self, "transducer_")
        return render(self.hypercubes_, nf)
