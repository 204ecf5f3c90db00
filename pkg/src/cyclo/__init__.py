"""
Cyclotomic Identities
Exact arithmetic in Q(ω) and the matrix identities behind the shift diagonalization on gl(n+1)
"""

from .numbers import CycNum, cyclotomic_coefficients, degree
from .matrices import CycMat
from .identities import (
    MAX_N, bbt_permutation, build_B, build_B_inverse, build_P, check_b_inverse_p_b,
    check_bbt_permutation, check_diagonal_form, check_shift_conjugation, check_torus_exponents,
    conjugated_shift, eigenvalue_exponents, torus_exponents,
)

__all__ = [
    'CycNum', 'cyclotomic_coefficients', 'degree',
    'CycMat',
    'MAX_N', 'bbt_permutation', 'build_B', 'build_B_inverse', 'build_P', 'check_b_inverse_p_b',
    'check_bbt_permutation', 'check_diagonal_form', 'check_shift_conjugation',
    'check_torus_exponents', 'conjugated_shift', 'eigenvalue_exponents', 'torus_exponents',
]
