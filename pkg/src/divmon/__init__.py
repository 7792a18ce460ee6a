"""Left divisibility monoids: oracle, hypercubes, right normal forms and transducers."""

from .axioms import CheckReport, Violation, check_all
from .estimator import RightNormalForm, check_presentation, check_words
from .exceptions import (DivmonError, MachineFormatError, NotADivisibilityMonoid, NotADivisor,
                         OracleLimitError, PresentationSyntaxError)
from .hypercubes import (Hypercube, HypercubeGraph, HypercubeTable, enumerate_hypercubes, hypercube_graph,
                         max_hypercube, reachable, strongly_connected)
from .lattice import DivisorLattice, lattice_is_distributive, lattice_width
from .monoid import Element, Monoid
from .normal_form import is_normal_pair, is_normal_word, normalize_oracle, render
from .presentation import Presentation, load_presentation, parse_presentation
from .transducer import Transducer, normalize_fast, run, synthesize, synthesize_augmented

__all__ = [
    "CheckReport", "Violation", "check_all",
    "RightNormalForm", "check_presentation", "check_words",
    "DivmonError", "MachineFormatError", "NotADivisibilityMonoid", "NotADivisor",
    "OracleLimitError", "PresentationSyntaxError",
    "Hypercube", "HypercubeGraph", "HypercubeTable", "enumerate_hypercubes", "hypercube_graph",
    "max_hypercube", "reachable", "strongly_connected",
    "DivisorLattice", "lattice_is_distributive", "lattice_width",
    "Element", "Monoid",
    "is_normal_pair", "is_normal_word", "normalize_oracle", "render",
    "Presentation", "load_presentation", "parse_presentation",
    "Transducer", "normalize_fast", "run", "synthesize", "synthesize_augmented",
]
__version__ = "0.1.0"
