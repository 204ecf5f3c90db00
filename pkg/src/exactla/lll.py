"""
LLL Reduction
Exact rational LLL on Gram matrices (Cohen's integral-free formulation)
"""

import logging
from fractions import Fraction
from math import floor
from typing import List, Tuple

from .ratmat import RatMat, Rational, to_fraction

logger = logging.getLogger(__name__)

DEFAULT_DELTA = Fraction(99, 100)


class DependentRowsError(ValueError):
    """Raised when LLL meets linearly dependent input rows"""


def lll_gram(gram: RatMat, delta: Rational = DEFAULT_DELTA) -> Tuple[RatMat, RatMat]:
    """LLL-reduce the basis whose Gram matrix is given.

    Args:
        gram: symmetric positive definite Gram matrix of the input basis
        delta: Lovász parameter, 1/4 < delta < 1

    Returns:
        (u, reduced_gram) where u is unimodular and reduced_gram = u·gram·uᵀ
    """
    delta = to_fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError(f"delta must lie in (1/4, 1), got {delta}")
    n = gram.rows
    g0 = gram.entries
    u: List[List[int]] = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 0:
        return RatMat((), cols=0), gram

    def ip(i: int, j: int) -> Fraction:
        ui, uj = u[i], u[j]
        total = Fraction(0)
        for a, ca in enumerate(ui):
            if ca:
                row = g0[a]
                total += ca * sum((row[b] * cb for b, cb in enumerate(uj) if cb), Fraction(0))
        return total

    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    bstar[0] = ip(0, 0)
    if bstar[0] == 0:
        raise DependentRowsError("zero vector in input")

    def reduce(k: int, l: int) -> None:
        if abs(mu[k][l]) > Fraction(1, 2):
            q = floor(mu[k][l] + Fraction(1, 2))
            u[k] = [a - q * b for a, b in zip(u[k], u[l])]
            mu[k][l] -= q
            for i in range(l):
                mu[k][i] -= q * mu[l][i]

    def swap(k: int, kmax: int) -> None:
        u[k], u[k - 1] = u[k - 1], u[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        b_new = bstar[k] + m * m * bstar[k - 1]
        mu[k][k - 1] = m * bstar[k - 1] / b_new
        bstar[k] = bstar[k - 1] * bstar[k] / b_new
        bstar[k - 1] = b_new
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k, kmax, swaps = 1, 0, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                mu[k][j] = (ip(k, j) - sum((mu[j][i] * mu[k][i] * bstar[i] for i in range(j)),
                                           Fraction(0))) / bstar[j]
            bstar[k] = ip(k, k) - sum((mu[k][j] ** 2 * bstar[j] for j in range(k)), Fraction(0))
            if bstar[k] == 0:
                raise DependentRowsError(f"row {k} depends on the previous rows")
        reduce(k, k - 1)
        if bstar[k] < (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            swap(k, kmax)
            swaps += 1
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    logger.debug("LLL finished in rank %d after %d swaps", n, swaps)
    transform = RatMat(u, cols=n)
    return transform, transform @ gram @ transform.T


def lll(basis: RatMat, delta: Rational = DEFAULT_DELTA) -> RatMat:
    """LLL-reduce linearly independent rows of a rational matrix (standard inner product)"""
    transform, _ = lll_gram(basis @ basis.T, delta)
    return transform @ basis
