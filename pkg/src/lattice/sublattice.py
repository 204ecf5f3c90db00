"""
Sublattices
Handles on sublattices, index, primitivity, saturation and annihilators
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from ..exactla import (
    RatMat, det, hnf_basis, integer_left_kernel, invariant_factors, kernel, solve_integer,
)
from .lattice import Embedding, Lattice, LatticeError, NotInLatticeError

INFINITE_INDEX = math.inf


@dataclass(frozen=True, eq=False)
class SublatticeHandle:
    """Integer generator rows of a sublattice in parent-basis coordinates (full row rank)"""
    parent: Lattice
    rows: RatMat
    name: str = ""

    @property
    def rank(self) -> int:
        return self.rows.rows

    @cached_property
    def lattice(self) -> Lattice:
        """The sublattice as a lattice in its own basis"""
        gram = self.rows @ self.parent.gram @ self.rows.T
        emb = None
        if self.parent.embedding is not None:
            emb = Embedding(self.rows @ self.parent.embedding.basis,
                            self.parent.embedding.ambient_scale)
        return Lattice(gram, emb, name=self.name, check=False)

    @cached_property
    def canonical_rows(self) -> RatMat:
        return hnf_basis(self.rows) if self.rank else self.rows

    def contains(self, vector: Sequence[int]) -> bool:
        if self.rank == 0:
            return all(v == 0 for v in vector)
        return solve_integer(self.rows, [int(v) for v in vector]) is not None

    def coordinates(self, vector: Sequence[int]):
        """Integer coordinates of a parent vector in the handle's basis"""
        coords = solve_integer(self.rows, [int(v) for v in vector])
        if coords is None:
            raise NotInLatticeError(f"vector {tuple(vector)} is not in sublattice {self.name}")
        return coords

    def same_as(self, other: "SublatticeHandle") -> bool:
        return self.parent is other.parent and self.canonical_rows == other.canonical_rows

    def __repr__(self) -> str:
        return f"SublatticeHandle(name={self.name!r}, rank={self.rank}, parent={self.parent.name!r})"


def _zero_handle(parent: Lattice, name: str = "") -> SublatticeHandle:
    return SublatticeHandle(parent, RatMat((), cols=parent.rank), name)


def sublattice(parent: Lattice, generators: Union[RatMat, Sequence[Sequence[int]]],
               name: str = "") -> SublatticeHandle:
    """Sublattice generated by integer coordinate rows.

    Raises:
        NotInLatticeError: if a generator has non-integral coordinates
    """
    gens = generators if isinstance(generators, RatMat) else RatMat(generators, cols=parent.rank)
    if gens.cols != parent.rank:
        raise LatticeError(f"generators have {gens.cols} coordinates, parent rank is {parent.rank}")
    if not gens.is_integral():
        raise NotInLatticeError("generators must have integer coordinates in the parent basis")
    if gens.rows == 0:
        return _zero_handle(parent, name)
    return SublatticeHandle(parent, hnf_basis(gens), name)


def sublattice_from_vectors(parent: Lattice, vectors, name: str = "") -> SublatticeHandle:
    """Sublattice generated by ambient vectors of an embedded parent"""
    coords = [parent.lattice_coordinates(v) for v in vectors]
    return sublattice(parent, RatMat(coords, cols=parent.rank), name)


def index(sub: SublatticeHandle, parent: Lattice = None):
    """[parent : sub] as an int, or INFINITE_INDEX when sub has lower rank"""
    parent = parent or sub.parent
    if sub.rank < parent.rank:
        return INFINITE_INDEX
    return abs(int(det(sub.rows)))


def is_primitive(sub: SublatticeHandle) -> bool:
    """sub = Q·sub ∩ parent, i.e. all invariant factors of the generator rows are 1"""
    if sub.rank == 0:
        return True
    factors = invariant_factors(sub.rows)
    return len(factors) == sub.rank and all(f == 1 for f in factors)


def saturation(sub: SublatticeHandle) -> SublatticeHandle:
    """Q·sub ∩ parent"""
    n = sub.parent.rank
    if sub.rank == 0:
        return sub
    if sub.rank == n:
        return SublatticeHandle(sub.parent, RatMat.identity(n), sub.name)
    null = kernel(sub.rows)
    return SublatticeHandle(sub.parent, integer_left_kernel(null.T), sub.name)


def annihilator(parent: Lattice, sub: SublatticeHandle, name: str = "") -> SublatticeHandle:
    """{v in parent : <v, s> = 0 for every generator s}; always primitive"""
    if sub.rank == 0:
        return SublatticeHandle(parent, RatMat.identity(parent.rank), name)
    products = parent.gram @ sub.rows.T
    rows = integer_left_kernel(products)
    if rows.rows == 0:
        return _zero_handle(parent, name)
    return SublatticeHandle(parent, rows, name)


def sum_of(parent: Lattice, *subs: SublatticeHandle, name: str = "") -> SublatticeHandle:
    """Sublattice generated by several handles of the same parent"""
    stacked = RatMat.vstack(*(s.rows for s in subs))
    return sublattice(parent, stacked, name)
