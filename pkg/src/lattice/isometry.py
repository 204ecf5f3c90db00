"""
Isometries
Integer matrices preserving a Gram form, fixed sublattices and characteristic data
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..exactla import RatMat, integer_left_kernel, inverse
from .lattice import Lattice, LatticeError
from .sublattice import SublatticeHandle, annihilator

MAX_ORDER = 100000


class NotAnIsometryError(LatticeError):
    """A matrix does not preserve the Gram form or is not integral"""


@dataclass(frozen=True, eq=False)
class Isometry:
    """x ↦ x·matrix on basis coordinates.

    Automorphisms have codomain None; an isometry between two lattices
    satisfies matrix·G₂·matrixᵀ = G₁ where G₂ is the codomain Gram.
    """
    lattice: Lattice
    matrix: RatMat
    codomain: Optional[Lattice] = None
    check: bool = True

    def __post_init__(self):
        if not self.check:
            return
        target = self.codomain or self.lattice
        m = self.matrix
        if m.shape != (self.lattice.rank, target.rank) or not m.is_integral():
            raise NotAnIsometryError("isometry matrix must be square and integral")
        if m @ target.gram @ m.T != self.lattice.gram:
            raise NotAnIsometryError("matrix does not preserve the Gram form")

    @classmethod
    def identity(cls, lattice: Lattice) -> "Isometry":
        return cls(lattice, RatMat.identity(lattice.rank), check=False)

    @property
    def is_automorphism(self) -> bool:
        return self.codomain is None or self.codomain is self.lattice

    def apply(self, coords: Sequence[int]) -> tuple:
        return tuple(int(x) for x in self.matrix.vecmul(coords))

    def compose(self, other: "Isometry") -> "Isometry":
        """self first, then other"""
        return Isometry(self.lattice, self.matrix @ other.matrix, other.codomain, check=False)

    def inverse(self) -> "Isometry":
        inv = inverse(self.matrix)
        if self.codomain is None:
            return Isometry(self.lattice, inv, check=False)
        return Isometry(self.codomain, inv, self.lattice, check=False)

    def power(self, k: int) -> "Isometry":
        if k < 0:
            return self.inverse().power(-k)
        result = RatMat.identity(self.lattice.rank)
        base = self.matrix
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return Isometry(self.lattice, result, check=False)

    def is_identity(self) -> bool:
        return self.matrix == RatMat.identity(self.lattice.rank)

    @cached_property
    def order(self) -> int:
        ident = RatMat.identity(self.lattice.rank)
        current = self.matrix
        for k in range(1, MAX_ORDER + 1):
            if current == ident:
                return k
            current = current @ self.matrix
        raise NotAnIsometryError(f"order exceeds {MAX_ORDER}")

    def mod(self, p: int) -> List[List[int]]:
        return [[int(x) % p for x in row] for row in self.matrix]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.lattice is other.lattice and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.matrix))

    def __repr__(self) -> str:
        return f"Isometry(lattice={self.lattice.name!r}, rank={self.lattice.rank})"


def fixed_sublattice(lattice: Lattice, g: Isometry, name: str = "") -> SublatticeHandle:
    """L⁺(g) = {x : x·g = x}, saturated by construction"""
    diff = g.matrix - RatMat.identity(lattice.rank)
    rows = integer_left_kernel(diff)
    return SublatticeHandle(lattice, rows if rows.rows else RatMat((), cols=lattice.rank), name)


def cofixed(lattice: Lattice, g: Isometry, name: str = "") -> SublatticeHandle:
    """L₊(g), the annihilator of the fixed sublattice"""
    return annihilator(lattice, fixed_sublattice(lattice, g), name)


def char_poly(g: Isometry) -> List[int]:
    """Characteristic polynomial coefficients, leading coefficient first"""
    n = g.lattice.rank
    dm = DomainMatrix([[ZZ(int(x)) for x in row] for row in g.matrix], (n, n), ZZ)
    return [int(c) for c in dm.charpoly()]


def trace(g: Isometry) -> int:
    return int(g.matrix.trace())


def has_fixed_points(g: Isometry) -> bool:
    """Eigenvalue 1 occurs iff char_poly(1) = 0"""
    return sum(char_poly(g)) == 0


def extend_isometry(lattice: Lattice, sub: SublatticeHandle, g: Isometry) -> Optional[Isometry]:
    """Extend an isometry of a finite-index sublattice to the whole lattice.

    Returns None (a refusal) when the unique linear extension does not map
    the lattice into itself.
    """
    if sub.rank != lattice.rank:
        raise LatticeError("extend_isometry needs a finite-index sublattice")
    s = sub.rows
    m = inverse(s) @ g.matrix @ s
    if not m.is_integral():
        return None
    return Isometry(lattice, m)


def reflection(lattice: Lattice, root: Sequence[int]) -> Isometry:
    """x ↦ x − (2<x,r>/<r,r>) r; must be integral on the lattice"""
    r = [Fraction(x) for x in root]
    gr = lattice.gram.vecmul(r)
    nr = sum((a * b for a, b in zip(gr, r)), Fraction(0))
    n = lattice.rank
    rows = []
    for i in range(n):
        coeff = 2 * gr[i] / nr
        rows.append([(1 if i == j else 0) - coeff * r[j] for j in range(n)])
    m = RatMat(rows, cols=n)
    if not m.is_integral():
        raise NotAnIsometryError(f"reflection in {tuple(root)} does not preserve the lattice")
    return Isometry(lattice, m, check=False)


def isometry_from_ambient(lattice: Lattice, ambient_map: RatMat) -> Isometry:
    """Isometry induced by an ambient linear map (e.g. a signed coordinate permutation).

    Raises:
        NotAnIsometryError: if the map does not preserve the lattice or the form
    """
    images = lattice.embedding.basis @ ambient_map
    rows = []
    for img in images:
        coords = lattice.coordinates(img)
        if any(c.denominator != 1 for c in coords):
            raise NotAnIsometryError("ambient map does not preserve the lattice")
        rows.append(coords)
    return Isometry(lattice, RatMat(rows, cols=lattice.rank))


def permutation_matrix(perm: Sequence[int], signs: Sequence[int] = None) -> RatMat:
    """Ambient map e_i ↦ sign_i · e_{perm[i]} (row convention)"""
    n = len(perm)
    signs = signs or [1] * n
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = signs[i]
    return RatMat(rows, cols=n)


def isometric(first: Lattice, second: Lattice, budget_seconds: float = None) -> Optional[Isometry]:
    """An isometry first → second, None when none exists.

    Raises:
        SearchBudgetExceeded: when the search runs out of time
    """
    from ..permgrp.backtrack import find_isometry

    return find_isometry(first, second, budget_seconds=budget_seconds)


def restrict_isometry(g: Isometry, sub: SublatticeHandle) -> Isometry:
    """g on a g-stable sublattice, in the sublattice's own basis.

    Raises:
        NotInLatticeError: if g does not map sub into itself
    """
    images = sub.rows @ g.matrix
    rows = [sub.coordinates(row) for row in images]
    return Isometry(sub.lattice, RatMat(rows, cols=sub.rank), check=False)
