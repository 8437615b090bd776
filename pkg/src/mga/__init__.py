"""Multiparticle geometric algebra toolkit for spin-1/2 quantum operations."""

from .algebra import (
    Element,
    MAX_PARTICLES,
    commutator,
    correlated_idempotent,
    even_projection,
    geometric_product,
    grade_involution,
    idempotent_e,
    linear_combine,
    max_deviation,
    particle_interchange,
    reverse,
    scalar_part,
    sigma,
)

__all__ = [
    "Element",
    "MAX_PARTICLES",
    "commutator",
    "correlated_idempotent",
    "even_projection",
    "geometric_product",
    "grade_involution",
    "idempotent_e",
    "linear_combine",
    "max_deviation",
    "particle_interchange",
    "reverse",
    "scalar_part",
    "sigma",
]

__version__ = "0.1.0"
