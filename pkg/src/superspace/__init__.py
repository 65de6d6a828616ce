"""Exact symbolic calculus for flat N=1 superspace and its matrix extension.

Coefficients are Gaussian-rational polynomials in x0..x3; all arithmetic is
exact.  Submodules build on each other in order: coeffring, grassmann,
calculus, susy, forms, connection, chirality, actions, dsl, verify, cli.
"""

from .coeffring import GaussRational, MatrixCoeff, PolyScalar, generic_matrix
from .grassmann import OperabilityError, Superfield, U4, U8, ULINE, mono_mul

__all__ = [
    "GaussRational",
    "MatrixCoeff",
    "OperabilityError",
    "PolyScalar",
    "Superfield",
    "U4",
    "U8",
    "ULINE",
    "generic_matrix",
    "mono_mul",
]

__version__ = "0.1.0"
