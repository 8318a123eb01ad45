"""Face-volume coordinates of simplices: which subsets determine the rest.

The package computes, for small n, the algebraic matroid of the variety of
squared face volumes of an n-simplex, decorates each basis with the degree
and monodromy group of its coordinate projection, and runs the realizability
sampling experiments.
"""

from .faces import Face, GroundSet, face, face_label, ground_set, parse_face
from .polynomials import MultiPoly, PolyMatrix, poly_det
from .cayley_menger import (
    cayley_menger_poly,
    heron_system,
    jacobian,
    parametrize,
)

__all__ = [
    "Face",
    "GroundSet",
    "MultiPoly",
    "PolyMatrix",
    "cayley_menger_poly",
    "face",
    "face_label",
    "ground_set",
    "heron_system",
    "jacobian",
    "parametrize",
    "parse_face",
    "poly_det",
]

__version__ = "0.1.0"
