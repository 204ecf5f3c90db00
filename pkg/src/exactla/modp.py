"""
Prime Field Linear Algebra
Row reduction, rank, null space and inverse modulo a prime, on sympy DomainMatrix over GF(p)
"""

from typing import List, Sequence, Tuple

from sympy import GF
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

Rows = List[List[int]]


def _to_gf(rows: Sequence[Sequence[int]], p: int, ncols: int = None) -> DomainMatrix:
    field = GF(p)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix([[field(int(x) % p) for x in r] for r in rows], (len(rows), width), field)


def _from_gf(dm: DomainMatrix, p: int) -> Rows:
    field = dm.domain
    return [[int(field.to_int(x)) % p for x in row] for row in dm.to_list()]


def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> Tuple[Rows, List[int]]:
    if not rows or not rows[0]:
        return [[x % p for x in r] for r in rows], []
    reduced, pivots = _to_gf(rows, p).rref()
    return _from_gf(reduced, p), list(pivots)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod_p(rows, p)[1])


def nullspace_mod_p(rows: Sequence[Sequence[int]], p: int) -> Rows:
    """Basis of {x : rows · x = 0} over F_p (right null space), one vector per free column"""
    ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref_mod_p(rows, p)
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        vec = [0] * ncols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-reduced[r][f]) % p
        basis.append(vec)
    return basis


def left_nullspace_mod_p(rows: Sequence[Sequence[int]], p: int) -> Rows:
    """Basis of {x : x · rows = 0} over F_p"""
    if not rows:
        return []
    transposed = [list(col) for col in zip(*rows)]
    if not transposed:
        return [[1 if i == j else 0 for j in range(len(rows))] for i in range(len(rows))]
    return nullspace_mod_p(transposed, p)


def det_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows:
        return 1
    return int(GF(p).to_int(_to_gf(rows, p).det())) % p


def inverse_mod_p(rows: Sequence[Sequence[int]], p: int) -> Rows:
    try:
        return _from_gf(_to_gf(rows, p).inv(), p)
    except DMNonInvertibleMatrixError:
        raise ValueError(f"matrix is singular modulo {p}") from None


def matmul_mod_p(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> Rows:
    width = len(b[0]) if b else 0
    if not a or not b or not width:
        return [[0] * width for _ in a]
    return _from_gf(_to_gf(a, p) * _to_gf(b, p, width), p)
