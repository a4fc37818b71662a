"""Certified exploration of triangular edges, triangles and spectral radius in small graphs."""

from .graph import Graph, CanonicalForm, canonical_form, from_graph6, is_isomorphic, to_graph6
from .spectral import CertifiedScalar, Comparison, SpectralEstimate, spectral_radius
from .verdicts import Outcome, Verdict

__all__ = [
    "CanonicalForm",
    "CertifiedScalar",
    "Comparison",
    "Graph",
    "Outcome",
    "SpectralEstimate",
    "Verdict",
    "canonical_form",
    "from_graph6",
    "is_isomorphic",
    "spectral_radius",
    "to_graph6",
]
