"""
Lattice
Positive definite lattices given by a rational Gram matrix and an optional embedding
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exactla import (
    RatMat, Rational, det, inverse, is_positive_definite, rational_hnf_basis, solve_left,
    to_fraction,
)


class LatticeError(ValueError):
    """Invalid lattice data"""


class NotInLatticeError(LatticeError):
    """A vector or generator does not lie in the lattice it was claimed to lie in"""


@dataclass(frozen=True)
class Embedding:
    """Basis rows in Q^n with ambient form s·Identity"""
    basis: RatMat
    ambient_scale: Fraction = Fraction(1)

    @property
    def ambient_dim(self) -> int:
        return self.basis.cols


@dataclass(frozen=True, eq=False)
class Lattice:
    """A positive definite lattice.

    Vectors are rows of basis coordinates and the form is x·G·yᵀ. When an
    embedding is present, gram = s·B·Bᵀ holds exactly.
    """
    gram: RatMat
    embedding: Optional[Embedding] = None
    name: str = ""
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if not self.check:
            return
        if not self.gram.is_symmetric():
            raise LatticeError(f"{self.name or 'lattice'}: Gram matrix is not symmetric")
        if not is_positive_definite(self.gram):
            raise LatticeError(f"{self.name or 'lattice'}: Gram matrix is not positive definite")
        if self.embedding is not None:
            b = self.embedding.basis
            if b.rows != self.gram.rows:
                raise LatticeError("embedding basis has the wrong number of rows")
            if (b @ b.T) * self.embedding.ambient_scale != self.gram:
                raise LatticeError("embedding does not reproduce the Gram matrix")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_gram(cls, gram, name: str = "") -> "Lattice":
        return cls(gram if isinstance(gram, RatMat) else RatMat(gram), name=name)

    @classmethod
    def from_basis(cls, basis, ambient_scale: Rational = 1, name: str = "") -> "Lattice":
        b = basis if isinstance(basis, RatMat) else RatMat(basis)
        s = to_fraction(ambient_scale)
        return cls((b @ b.T) * s, Embedding(b, s), name=name)

    @classmethod
    def from_generators(cls, generators, ambient_scale: Rational = 1, name: str = "") -> "Lattice":
        """Embedded lattice spanned by (possibly dependent) rational ambient vectors"""
        g = generators if isinstance(generators, RatMat) else RatMat(generators)
        return cls.from_basis(rational_hnf_basis(g), ambient_scale, name)

    def renamed(self, name: str) -> "Lattice":
        return Lattice(self.gram, self.embedding, name, check=False)

    # -- invariants ---------------------------------------------------

    @property
    def rank(self) -> int:
        return self.gram.rows

    @cached_property
    def determinant(self) -> Fraction:
        return det(self.gram)

    @cached_property
    def is_integral(self) -> bool:
        return self.gram.is_integral()

    @cached_property
    def is_even(self) -> bool:
        return self.is_integral and all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    @cached_property
    def is_unimodular(self) -> bool:
        return self.is_integral and abs(self.determinant) == 1

    def inner(self, x: Sequence[Rational], y: Sequence[Rational]) -> Fraction:
        return sum((a * b for a, b in zip(self.gram.vecmul(x), y)), Fraction(0))

    def norm(self, x: Sequence[Rational]) -> Fraction:
        return self.inner(x, x)

    @cached_property
    def integer_gram(self) -> Tuple[np.ndarray, int]:
        """(D·gram as an int64 array, D) with D the least common denominator"""
        scaled, d = self.gram.scaled_ints()
        return np.array(scaled, dtype=np.int64).reshape(self.rank, self.rank), d

    # -- embedded data ------------------------------------------------

    @property
    def is_embedded(self) -> bool:
        return self.embedding is not None

    def ambient(self, coords: Sequence[Rational]) -> Tuple[Fraction, ...]:
        return self._require_embedding().basis.vecmul(coords)

    def coordinates(self, vector: Sequence[Rational]) -> Tuple[Fraction, ...]:
        """Rational basis coordinates of an ambient vector in the span of the lattice"""
        coords = solve_left(self._require_embedding().basis, [to_fraction(v) for v in vector])
        if coords is None:
            raise NotInLatticeError(f"vector {tuple(vector)} is outside the span of {self.name}")
        return coords

    def lattice_coordinates(self, vector: Sequence[Rational]) -> Tuple[int, ...]:
        coords = self.coordinates(vector)
        if any(c.denominator != 1 for c in coords):
            raise NotInLatticeError(f"vector {tuple(vector)} is not in {self.name}")
        return tuple(c.numerator for c in coords)

    @cached_property
    def canonical_basis(self) -> RatMat:
        """HNF of the embedded basis; equal iff the embedded lattices are equal"""
        return rational_hnf_basis(self._require_embedding().basis)

    def same_embedded_lattice(self, other: "Lattice") -> bool:
        return (self.embedding.ambient_scale == other.embedding.ambient_scale
                and self.canonical_basis == other.canonical_basis)

    def _require_embedding(self) -> Embedding:
        if self.embedding is None:
            raise LatticeError(f"{self.name or 'lattice'} has no ambient embedding")
        return self.embedding

    def __repr__(self) -> str:
        return f"Lattice(name={self.name!r}, rank={self.rank}, det={self.determinant})"


# -- structural constructors ------------------------------------------


def dual(lattice: Lattice) -> Lattice:
    """Dual lattice in the dual basis: Gram = G⁻¹ (embedded basis G⁻¹·B)"""
    g_inv = inverse(lattice.gram)
    emb = None
    if lattice.embedding is not None:
        emb = Embedding(g_inv @ lattice.embedding.basis, lattice.embedding.ambient_scale)
    return Lattice(g_inv, emb, name=f"dual({lattice.name})", check=False)


def direct_sum(first: Lattice, second: Lattice) -> Lattice:
    gram = RatMat.block_diagonal(first.gram, second.gram)
    emb = None
    if (first.embedding is not None and second.embedding is not None
            and first.embedding.ambient_scale == second.embedding.ambient_scale):
        emb = Embedding(RatMat.block_diagonal(first.embedding.basis, second.embedding.basis),
                        first.embedding.ambient_scale)
    return Lattice(gram, emb, name=f"{first.name}+{second.name}", check=False)


def scale(lattice: Lattice, k: Rational) -> Lattice:
    """Gram multiplied by k > 0; the embedding keeps its basis and scales the ambient form"""
    k = to_fraction(k)
    if k <= 0:
        raise LatticeError("scale factor must be positive")
    emb = None
    if lattice.embedding is not None:
        emb = Embedding(lattice.embedding.basis, lattice.embedding.ambient_scale * k)
    return Lattice(lattice.gram * k, emb, name=f"{lattice.name}[{k}]", check=False)


def tensor(first: Lattice, second: Lattice) -> Lattice:
    """Kronecker product; basis vector (i, j) sits at index i*rank(second)+j"""
    gram = RatMat.kron(first.gram, second.gram)
    emb = None
    if first.embedding is not None and second.embedding is not None:
        emb = Embedding(RatMat.kron(first.embedding.basis, second.embedding.basis),
                        first.embedding.ambient_scale * second.embedding.ambient_scale)
    return Lattice(gram, emb, name=f"{first.name}x{second.name}", check=False)


def is_even(lattice: Lattice) -> bool:
    return lattice.is_even


def is_integral(lattice: Lattice) -> bool:
    return lattice.is_integral


def is_unimodular(lattice: Lattice) -> bool:
    return lattice.is_unimodular


def determinant(lattice: Lattice) -> Fraction:
    return lattice.determinant
