"""Gorenstein weighted projective 3-spaces: invariants, Veronese models, toric maps and curve checks."""

from .classify import (
    anticanonical_genus,
    enumerate_gorenstein_wps3,
    gorenstein_invariants,
    is_basepoint_free,
    is_gorenstein,
    is_well_formed,
    primitive_genus,
)
from .grading import DimensionError, DomainError, WeightedSpace, hilbert_count, monomials_of_degree
from .intersect import extension_consistency, model_degree, top_intersection
from .poly import Coords, MultiplicityProfile, SparsePoly, binary_profile, parse_poly, substitute
from .reference import load_reference
from .toric import Fan, MonomialMap, compose, equal_mod_scaling, pullback, weighted_blowup, wps_fan
from .veronese import NotHypersurface, embed_as_hypersurface, veronese_embedding

__version__ = "0.1.0"

__all__ = [
    "Coords",
    "DimensionError",
    "DomainError",
    "Fan",
    "MonomialMap",
    "MultiplicityProfile",
    "NotHypersurface",
    "SparsePoly",
    "WeightedSpace",
    "anticanonical_genus",
    "binary_profile",
    "compose",
    "embed_as_hypersurface",
    "enumerate_gorenstein_wps3",
    "equal_mod_scaling",
    "extension_consistency",
    "gorenstein_invariants",
    "hilbert_count",
    "is_basepoint_free",
    "is_gorenstein",
    "is_well_formed",
    "load_reference",
    "model_degree",
    "monomials_of_degree",
    "parse_poly",
    "primitive_genus",
    "pullback",
    "substitute",
    "top_intersection",
    "veronese_embedding",
    "weighted_blowup",
    "wps_fan",
]
