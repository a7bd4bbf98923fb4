"""Parity proofs of the Kochen-Specker theorem in the 60-ray / 75-basis system of the 600-cell."""

from .golden import GoldenNumber
from .polytope import Polytope, default_polytope
from .raybasis import RayBasisSet, is_parity_proof, profile
from .search import SearchTarget, is_basis_critical, search

__all__ = [
    "GoldenNumber",
    "Polytope",
    "RayBasisSet",
    "SearchTarget",
    "default_polytope",
    "is_basis_critical",
    "is_parity_proof",
    "profile",
    "search",
]
