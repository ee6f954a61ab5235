"""Determinantal presentations, G-tangent spaces, versal families and transforms."""

from .presentation import (
    EidsPresentation,
    PreconditionError,
    VersalFamily,
    generic_determinantal,
    generic_linear_presentation,
    presentation_from_strings,
)
from .tangent import tangent_basis, tangent_generators, tau_g, versal_unfolding
from .transform import (
    TjurinaTransformIdeal,
    is_singular,
    nu_star,
    plucker_relations,
    tjurina_transform_general,
    tjurina_transform_maximal,
)

__all__ = [
    "EidsPresentation", "PreconditionError", "VersalFamily", "generic_determinantal",
    "generic_linear_presentation", "presentation_from_strings",
    "tangent_basis", "tangent_generators", "tau_g", "versal_unfolding",
    "TjurinaTransformIdeal", "is_singular", "nu_star", "plucker_relations",
    "tjurina_transform_general", "tjurina_transform_maximal",
]
