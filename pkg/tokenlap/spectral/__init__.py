from tokenlap.spectral.closed_forms import closed_form_from_text, closed_form_spectrum
from tokenlap.spectral.core import (
    algebraic_connectivity,
    eigh_sym,
    lift_vector,
    project_vector,
    rayleigh,
    restriction_embeddings,
    spectrum_contains,
    spectrum_of,
)
from tokenlap.spectral.pairing import integer_eigenvalue_bound, pairing_decomposition
from tokenlap.spectral.stars import verify_star_isomorphism

__all__ = [
    "algebraic_connectivity",
    "closed_form_from_text",
    "closed_form_spectrum",
    "eigh_sym",
    "integer_eigenvalue_bound",
    "lift_vector",
    "pairing_decomposition",
    "project_vector",
    "rayleigh",
    "restriction_embeddings",
    "spectrum_contains",
    "spectrum_of",
    "verify_star_isomorphism",
]
