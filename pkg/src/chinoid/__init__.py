"""The Chinese monoid: canonical forms, the diagram tree of minimal primes,
and monomial representations, all in exact arithmetic."""

from .core import CanonicalForm, congruence_class, equivalent, multiply, normalize, parse_word, format_word
from .diagrams import Diagram, children, enumerate_leaves, first_level, prime_catalog_check
from .quotients import BicyclicElement, CyclicElement, ProductElement, apply_branch
from .reps import MonomialRep, SparseVector, central_scalars, cyclic_reach, inductive_extend, standard_module

__version__ = "0.1.0"
