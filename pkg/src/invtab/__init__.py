"""Inversions tableaux: a tableau model for Schubert polynomials.

Permutations, inversions diagrams, inversions tableaux and their bijection
with reduced pipe dreams, Schubert and Schur polynomials, the Grassmannian
specialisations and chute moves.
"""

from .diagram import InversionsDiagram, diagram_of
from .exceptions import InvtabError
from .perm import Permutation, parse_permutation
from .pipedream import PipeDream, enumerate_RP, phi, phi_inverse
from .poly import SparsePolynomial, schur
from .schubert import schubert_dd, schubert_from_pipedreams, schubert_from_tableaux
from .tableau import InversionsTableau, enumerate_IT

__version__ = "0.1.0"

__all__ = [
    "InversionsDiagram", "InversionsTableau", "InvtabError", "Permutation",
    "PipeDream", "SparsePolynomial", "diagram_of", "enumerate_IT",
    "enumerate_RP", "parse_permutation", "phi", "phi_inverse", "schubert_dd",
    "schubert_from_pipedreams", "schubert_from_tableaux", "schur",
]
