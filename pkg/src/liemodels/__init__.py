"""Exact computational Lie theory for rank-three sub-Riemannian model algebras.

All arithmetic is exact: rationals, Gaussian rationals and sparse
polynomials with rational coefficients.  The subpackage
:mod:`liemodels.catalog` holds the named algebras and their verifications.
"""

from .lie import (LieAlgebra, LieError, LinearMap, associated_graded, check_map, direct_sum,
                  from_bracket, generated_subalgebra, growth_vector, jacobi_defect, killing_signature,
                  quotient, semidirect)
from .linalg import Matrix, Subspace
from .model import ModelAlgebra
from .poly import MultiPoly
from .scalars import GaussianRational, UnsupportedParameterError, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "LieAlgebra", "LieError", "LinearMap", "Matrix", "ModelAlgebra",
    "MultiPoly", "Subspace", "UnsupportedParameterError", "associated_graded", "check_map",
    "direct_sum", "format_scalar", "from_bracket", "generated_subalgebra", "growth_vector",
    "jacobi_defect", "killing_signature", "parse_scalar", "quotient", "semidirect",
]
