"""
Exact Linear Algebra
Integer and rational dense linear algebra: the substrate for every other module
"""

from .ratmat import RatMat, DimensionError, Rational, format_rational, to_fraction
from .linalg import (
    SingularMatrixError, det, inverse, kernel, rank, rref, solve, solve_left,
    is_positive_definite,
)
from .normal_forms import (
    SnfResult, hnf, hnf_basis, rational_hnf_basis, snf, invariant_factors,
    integer_left_kernel, solve_integer, xgcd,
)
from .lll import DEFAULT_DELTA, DependentRowsError, lll, lll_gram
from .modp import (
    det_mod_p, inverse_mod_p, left_nullspace_mod_p, matmul_mod_p, nullspace_mod_p,
    rank_mod_p, rref_mod_p,
)

__all__ = [
    'RatMat', 'DimensionError', 'Rational', 'format_rational', 'to_fraction',
    'SingularMatrixError', 'det', 'inverse', 'kernel', 'rank', 'rref', 'solve', 'solve_left',
    'is_positive_definite',
    'SnfResult', 'hnf', 'hnf_basis', 'rational_hnf_basis', 'snf', 'invariant_factors',
    'integer_left_kernel', 'solve_integer', 'xgcd',
    'DEFAULT_DELTA', 'DependentRowsError', 'lll', 'lll_gram',
    'det_mod_p', 'inverse_mod_p', 'left_nullspace_mod_p', 'matmul_mod_p', 'nullspace_mod_p',
    'rank_mod_p', 'rref_mod_p',
]
