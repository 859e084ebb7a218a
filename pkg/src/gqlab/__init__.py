"""gqlab: the generalized quadrangle GQ(2,4) built from the 27 invertible
non-identity symmetric 3x3 matrices over GF(2), with every structural claim
verified by exhaustive computation."""

from gqlab.checks import run_suite
from gqlab.quadrangle import (
    build_double_six_model,
    build_matrix_quadrangle,
    build_quadric_quadrangle,
    find_isomorphism,
    verify_gq_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "build_double_six_model",
    "build_matrix_quadrangle",
    "build_quadric_quadrangle",
    "find_isomorphism",
    "run_suite",
    "verify_gq_axioms",
]
