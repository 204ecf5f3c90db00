"""
Shift and Fourier Identities
Exact checks of the matrices P and B that diagonalize the cyclic shift on gl(n+1)

B carries the factor 1/√(n+1) in its usual normalization. Every matrix here
is the cleared version √(n+1)·B = [ω^(ij)], with its inverse
(1/(n+1))·[ω^(−ij)], so all entries stay in Q(ω). Indices run over
1, …, n+1 in the formulas and 0, …, n in code.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .matrices import CycMat
from .numbers import CycNum

logger = logging.getLogger(__name__)

MAX_N = 8


def _check_n(n: int) -> int:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")
    return n + 1


def _check_root(m: int, root_power: int) -> None:
    if gcd(root_power, m) != 1:
        raise ValueError(f"ω^{root_power} is not a primitive {m}-th root of unity")


def build_P(n: int, transposed: bool = False) -> CycMat:
    """Cyclic shift with P[i, i+1] = 1 (indices mod n+1)"""
    m = _check_n(n)
    rows = [[int(j == (i + 1) % m) for j in range(m)] for i in range(m)]
    p = CycMat.from_ints(m, rows)
    return p.T if transposed else p


def build_B(n: int, root_power: int = 1) -> CycMat:
    """√(n+1)·B = [ω^((i+1)(j+1))] with ω replaced by ω^root_power"""
    m = _check_n(n)
    _check_root(m, root_power)
    return CycMat.build(m, m, lambda i, j: CycNum.root_power(m, root_power * (i + 1) * (j + 1)))


def build_B_inverse(n: int, root_power: int = 1) -> CycMat:
    """(√(n+1)·B)⁻¹ = (1/(n+1))·[ω^(−(i+1)(j+1))]"""
    m = _check_n(n)
    _check_root(m, root_power)
    scale = Fraction(1, m)
    return CycMat.build(m, m, lambda i, j: CycNum.root_power(m, -root_power * (i + 1) * (j + 1)) * scale)


def check_shift_conjugation(n: int, p: Optional[CycMat] = None) -> bool:
    """P⁻¹·E_{i,j}·P = E_{i+1,j+1} for all i ≠ j"""
    m = _check_n(n)
    p = p if p is not None else build_P(n)
    p_inv = p.T
    if p @ p_inv != CycMat.identity(m, m):
        return False
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            moved = p_inv @ CycMat.elementary(m, m, i, j) @ p
            if moved != CycMat.elementary(m, m, (i + 1) % m, (j + 1) % m):
                logger.debug("shift conjugation fails at E_%d,%d", i, j)
                return False
    return True


def bbt_permutation(n: int, root_power: int = 1) -> Optional[Tuple[int, ...]]:
    """π with (√(n+1)B)(√(n+1)B)ᵀ = (n+1)·P_π, or None if the product is not of that form"""
    m = _check_n(n)
    b = build_B(n, root_power)
    product = b @ b.T
    target = CycNum.rational(m, m)
    image = []
    for i in range(m):
        row = product.rows[i]
        hits = [j for j, x in enumerate(row) if not x.is_zero()]
        if len(hits) != 1 or row[hits[0]] != target:
            return None
        image.append(hits[0])
    if sorted(image) != list(range(m)):
        return None
    return tuple(image)


def check_bbt_permutation(n: int, root_power: int = 1) -> bool:
    """B·Bᵀ is a permutation matrix of order at most 2 (exactly 2 once n ≥ 2)"""
    perm = bbt_permutation(n, root_power)
    if perm is None:
        return False
    involution = all(perm[perm[i]] == i for i in range(len(perm)))
    moves = any(perm[i] != i for i in range(len(perm)))
    return involution and (moves or n == 1)


def conjugated_shift(n: int, root_power: int = 1) -> CycMat:
    """B⁻¹·P·B"""
    return build_B_inverse(n, root_power) @ build_P(n) @ build_B(n, root_power)


def check_b_inverse_p_b(n: int, root_power: int = 1) -> bool:
    """B⁻¹·P·B = diag(ω, ω², …, ωⁿ, 1)"""
    m = _check_n(n)
    if build_B_inverse(n, root_power) @ build_B(n, root_power) != CycMat.identity(m, m):
        return False
    expected = CycMat.diagonal(m, [CycNum.root_power(m, root_power * (i + 1)) for i in range(m)])
    return conjugated_shift(n, root_power) == expected


def eigenvalue_exponents(n: int, root_power: int = 1) -> List[int]:
    """k_i with (B⁻¹PB)_ii = ω^(k_i), read off the computed matrix"""
    m = _check_n(n)
    d = conjugated_shift(n, root_power)
    if not d.is_diagonal():
        raise ValueError("B⁻¹PB is not diagonal")
    powers = {CycNum.root_power(m, k): k for k in range(m)}
    try:
        return [powers[x] for x in d.diagonal_entries()]
    except KeyError:
        raise ValueError("a diagonal entry of B⁻¹PB is not a power of ω")


def torus_exponents(n: int) -> List[Fraction]:
    """(n/2, n/2 − 1, …, −n/2)"""
    _check_n(n)
    return [Fraction(n, 2) - i for i in range(n + 1)]


def check_torus_exponents(n: int) -> bool:
    """The eigenvalue exponents agree with the torus exponents up to sign and a constant shift mod n+1"""
    m = n + 1
    k = eigenvalue_exponents(n)
    x = torus_exponents(n)
    return all((k[j] - k[i] - (x[i] - x[j])) % m == 0 for i in range(m) for j in range(m))


def check_diagonal_form(n: int, root_power: int = 1, expected_power: Optional[int] = None) -> bool:
    """(s h̃ s⁻¹)(E_{i,j}) = ω^(j−i)·E_{i,j}, where h̃ is conjugation by P and s by B.

    B is built from ω^root_power and the eigenvalue is compared with
    ω^(expected_power·(j−i)); expected_power defaults to root_power.
    """
    m = _check_n(n)
    expected_power = root_power if expected_power is None else expected_power
    b, b_inv, p = build_B(n, root_power), build_B_inverse(n, root_power), build_P(n)
    d = b_inv @ p @ b
    d_inv = b_inv @ p.T @ b
    if not (d.is_diagonal() and d_inv.is_diagonal()):
        return False
    # D⁻¹·E_{i,j}·D = d⁻¹_i·d_j·E_{i,j} for diagonal D
    left, right = d_inv.diagonal_entries(), d.diagonal_entries()
    for i in range(m):
        for j in range(m):
            if left[i] * right[j] != CycNum.root_power(m, expected_power * (j - i)):
                logger.debug("diagonal form fails at E_%d,%d (root power %d)", i, j, root_power)
                return False
    return True
