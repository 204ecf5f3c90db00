"""
Integer Normal Forms
Hermite and Smith normal forms over ZZ with sympy; row-HNF transforms kept here
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import ZZ
from sympy.core.intfunc import igcdex
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (
    hermite_normal_form, invariant_factors as _invariant_factors, smith_normal_decomp,
)

from .ratmat import DimensionError, RatMat

IntRows = List[List[int]]
MatrixLike = Union[RatMat, Sequence[Sequence[int]]]


@dataclass(frozen=True)
class SnfResult:
    """u · m · v = d with d diagonal and d[i] | d[i+1]"""
    d: RatMat
    u: RatMat
    v: RatMat

    @property
    def diagonal(self) -> List[int]:
        return [int(self.d[i, i]) for i in range(min(self.d.shape))]


def _as_int_rows(m: MatrixLike) -> Tuple[IntRows, int]:
    if isinstance(m, RatMat):
        return m.to_ints(), m.cols
    rows = [[int(x) for x in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def _to_zz(rows: IntRows, ncols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), ncols), ZZ)


def _from_zz(dm: DomainMatrix) -> IntRows:
    return [[int(x) for x in row] for row in dm.to_list()]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0"""
    x, y, g = igcdex(a, b)
    return int(g), int(x), int(y)


def _identity(n: int) -> IntRows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hnf_rows(rows: IntRows, ncols: int) -> Tuple[IntRows, IntRows, List[int]]:
    """Row HNF with its unimodular transform (sympy returns only the form).

    Returns (h, u, pivot_columns) with u·rows = h; zero rows of h sit at the bottom.
    """
    a = [list(r) for r in rows]
    n = len(a)
    u = _identity(n)
    pivots: List[int] = []
    pr = 0
    for col in range(ncols):
        if pr == n:
            break
        for i in range(pr + 1, n):
            if a[i][col] == 0:
                continue
            g, x, y = xgcd(a[pr][col], a[i][col])
            p, q = -a[i][col] // g, a[pr][col] // g
            rp, ri = a[pr], a[i]
            a[pr] = [x * s + y * t for s, t in zip(rp, ri)]
            a[i] = [p * s + q * t for s, t in zip(rp, ri)]
            up, ui = u[pr], u[i]
            u[pr] = [x * s + y * t for s, t in zip(up, ui)]
            u[i] = [p * s + q * t for s, t in zip(up, ui)]
        piv = a[pr][col]
        if piv == 0:
            continue
        if piv < 0:
            a[pr] = [-s for s in a[pr]]
            u[pr] = [-s for s in u[pr]]
            piv = -piv
        for i in range(pr):
            f = a[i][col] // piv
            if f:
                a[i] = [s - f * t for s, t in zip(a[i], a[pr])]
                u[i] = [s - f * t for s, t in zip(u[i], u[pr])]
        pivots.append(col)
        pr += 1
    return a, u, pivots


def hnf(m: MatrixLike) -> Tuple[RatMat, RatMat]:
    """Row HNF of an integer matrix: (h, u) with u·m = h"""
    rows, ncols = _as_int_rows(m)
    h, u, _ = hnf_rows(rows, ncols)
    return RatMat(h, cols=ncols), RatMat(u, cols=len(rows))


def hnf_basis(m: MatrixLike) -> RatMat:
    """Nonzero rows of the row HNF: a canonical basis of the row lattice.

    sympy's column HNF puts pivots bottom-right; run on the transpose with the
    coordinates reversed it gives the upper echelon form with positive pivots
    and entries above each pivot reduced into [0, pivot).
    """
    rows, ncols = _as_int_rows(m)
    if not rows or not ncols:
        return RatMat((), cols=ncols)
    flipped = [[r[ncols - 1 - c] for r in rows] for c in range(ncols)]
    w = _from_zz(hermite_normal_form(_to_zz(flipped, len(rows))))
    k = len(w[0]) if w else 0
    basis = [[w[ncols - 1 - c][t] for c in range(ncols)] for t in reversed(range(k))]
    return RatMat(basis, cols=ncols)


def rational_hnf_basis(m: RatMat) -> RatMat:
    """Canonical basis of the Z-span of rational rows (HNF after clearing denominators)"""
    scaled, d = m.scaled_ints()
    if not scaled:
        return RatMat((), cols=m.cols)
    return hnf_basis(RatMat(scaled, cols=m.cols)) * Fraction(1, d)


def snf(m: MatrixLike) -> SnfResult:
    """Smith normal form with transforms, u·m·v = d"""
    rows, ncols = _as_int_rows(m)
    if not rows or not ncols:
        return SnfResult(d=RatMat(rows, cols=ncols), u=RatMat.identity(len(rows)),
                         v=RatMat.identity(ncols))
    d, u, v = smith_normal_decomp(_to_zz(rows, ncols))
    return SnfResult(d=RatMat(_from_zz(d), cols=ncols), u=RatMat(_from_zz(u), cols=len(rows)),
                     v=RatMat(_from_zz(v), cols=ncols))


def invariant_factors(m: MatrixLike) -> List[int]:
    """Nonzero diagonal entries of the Smith form"""
    rows, ncols = _as_int_rows(m)
    if not rows or not ncols:
        return []
    return [abs(int(x)) for x in _invariant_factors(_to_zz(rows, ncols)) if x != 0]


def integer_left_kernel(m: RatMat) -> RatMat:
    """Basis of {x in Z^r : x·m = 0}, computed from the HNF transform (always saturated)"""
    scaled, _ = m.scaled_ints()
    if not scaled:
        return RatMat((), cols=0)
    _, u, pivots = hnf_rows(scaled, m.cols)
    return RatMat(u[len(pivots):], cols=m.rows)


def solve_integer(m: MatrixLike, target: Sequence[int]) -> Optional[List[int]]:
    """Integer x with x·m = target, or None if no integer solution exists"""
    rows, ncols = _as_int_rows(m)
    if len(target) != ncols:
        raise DimensionError(f"target of length {len(target)} for {ncols} columns")
    h, u, pivots = hnf_rows(rows, ncols)
    residual = [int(t) for t in target]
    y = [0] * len(rows)
    for r, c in enumerate(pivots):
        if residual[c] % h[r][c]:
            return None
        y[r] = residual[c] // h[r][c]
        if y[r]:
            residual = [s - y[r] * t for s, t in zip(residual, h[r])]
    if any(residual):
        return None
    x = [0] * len(rows)
    for r, coeff in enumerate(y):
        if coeff:
            x = [s + coeff * t for s, t in zip(x, u[r])]
    return x
