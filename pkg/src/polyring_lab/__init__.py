"""Polyrings, their Zariski topologies, and the finite combinatorics around them."""

from .algebras import FiniteGroupoid, FinitePolyring, SymbolicPolyring, evaluate, named_instance
from .terms import Polynomial, Signature, degree, normalize, parse_term, to_text

__version__ = "0.1.0"

__all__ = [
    "FiniteGroupoid", "FinitePolyring", "SymbolicPolyring", "evaluate", "named_instance",
    "Polynomial", "Signature", "degree", "normalize", "parse_term", "to_text",
]
