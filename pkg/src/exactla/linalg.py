"""
Exact Linear Algebra
Determinant, rank, inverse, kernel and solve over the rationals, on sympy DomainMatrix over QQ
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .ratmat import DimensionError, RatMat, Rational, to_fraction


class SingularMatrixError(ValueError):
    """Raised when an inverse is requested for a singular matrix"""


def to_domain_matrix(m: RatMat) -> DomainMatrix:
    """The same matrix as a DomainMatrix over QQ"""
    rows = [[QQ(x.numerator, x.denominator) for x in row] for row in m.entries]
    return DomainMatrix(rows, m.shape, QQ)


def from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def from_domain_matrix(dm: DomainMatrix) -> RatMat:
    return RatMat(([from_qq(x) for x in row] for row in dm.to_list()), cols=dm.shape[1])


def det(m: RatMat) -> Fraction:
    """Exact determinant of a square rational matrix"""
    if not m.is_square():
        raise DimensionError(f"determinant of non-square {m.shape}")
    if m.rows == 0:
        return Fraction(1)
    return from_qq(to_domain_matrix(m).det())


def rref(m: RatMat) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and pivot columns"""
    if m.rows == 0 or m.cols == 0:
        return [list(r) for r in m.entries], []
    reduced, pivots = to_domain_matrix(m).rref()
    return [[from_qq(x) for x in row] for row in reduced.to_list()], list(pivots)


def rank(m: RatMat) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return to_domain_matrix(m).rank()


def inverse(m: RatMat) -> RatMat:
    """Exact inverse; raises SingularMatrixError"""
    if not m.is_square():
        raise DimensionError(f"inverse of non-square {m.shape}")
    if m.rows == 0:
        return m
    try:
        return from_domain_matrix(to_domain_matrix(m).inv())
    except DMNonInvertibleMatrixError:
        raise SingularMatrixError("matrix is singular") from None


def kernel(m: RatMat) -> RatMat:
    """Basis (as rows) of the rational null space {x : m x = 0}, one row per free column.

    Example: kernel of [[1, 1]] is spanned by (-1, 1).
    """
    reduced, pivots = rref(m)
    basis = []
    for f in (c for c in range(m.cols) if c not in pivots):
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(vec)
    return RatMat(basis, cols=m.cols)


def solve(m: RatMat, b: Sequence[Rational]) -> Optional[Tuple[Fraction, ...]]:
    """Particular solution x of m x = b, or None when the system is inconsistent.

    Raises:
        DimensionError: when b does not match the row count of m, or m has no columns
    """
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.shape}")
    if m.cols == 0:
        raise DimensionError("system has no unknowns")
    aug = RatMat.hstack(m, RatMat([[to_fraction(x)] for x in b], cols=1))
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r][m.cols]
    return tuple(x)


def solve_left(m: RatMat, b: Sequence[Rational]) -> Optional[Tuple[Fraction, ...]]:
    """Row-vector solve: x with x m = b"""
    return solve(m.T, b)


def is_positive_definite(gram: RatMat) -> bool:
    """Sylvester's criterion: every leading principal minor is positive"""
    if not gram.is_symmetric():
        return False
    dm = to_domain_matrix(gram)
    return all(dm[:k, :k].det() > 0 for k in range(1, gram.rows + 1))
