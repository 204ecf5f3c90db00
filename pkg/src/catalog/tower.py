"""
3C Tower
The M, M′ ⊂ E8 ⊥ E8 tower, the K ⊂ M data of a 3C pair, M(4) signs and Miyamoto involutions
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import numpy as np

from ..exactla import RatMat, inverse
from ..lattice import (
    Isometry, Lattice, SublatticeHandle, direct_sum, index, sublattice, sum_of,
)
from ..shortvec import ShortVectorSet, root_count, short_vectors
from .data import ConstructionError
from .root_lattices import base_symbols, e8_a8_plus_three, e8_tetracode, h_on_e8

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Tower:
    """M = {(x, x)} and M′ = {(hx, x)} inside E8 ⊥ E8, and Q = M + M′"""
    ambient: Lattice
    h: Isometry
    m: SublatticeHandle
    m_prime: SublatticeHandle
    q: SublatticeHandle


@lru_cache(maxsize=None)
def m_mprime_tower() -> Tower:
    """
    Raises:
        ConstructionError: if M ∩ M′ ≠ 0 or M + M′ has roots
    """
    e8 = e8_tetracode().lattice
    h = h_on_e8()
    ambient = direct_sum(e8, e8).renamed("E8+E8")
    ident = RatMat.identity(8)
    m = sublattice(ambient, RatMat.hstack(ident, ident), name="M")
    m_prime = sublattice(ambient, RatMat.hstack(h.matrix, ident), name="M'")
    q = sum_of(ambient, m, m_prime, name="M+M'")
    if q.rank != m.rank + m_prime.rank:
        raise ConstructionError("M and M′ intersect")
    if m.lattice.gram != e8.gram * 2:
        raise ConstructionError("M is not the doubled E8")
    if root_count(q.lattice):
        raise ConstructionError("M + M′ has roots")
    return Tower(ambient, h, m, m_prime, q)


@dataclass(frozen=True, eq=False)
class K3CData:
    """K ≅ √2A8 of index 3 in M ≅ √2E8, with M = K ∪ (β+K) ∪ (−β+K).

    gamma_vec is an ambient vector in ℚ⊗K pairing integrally with K and
    to 4/3 with beta_vec, so v ↦ 3⟨γ, v⟩ mod 3 is a character of M with
    kernel K.
    """
    m: Lattice
    k: SublatticeHandle
    beta_vec: Tuple[Fraction, ...]
    gamma_vec: Tuple[Fraction, ...]

    def pairing(self, ambient_vector: Sequence[Fraction]) -> Fraction:
        s = self.m.embedding.ambient_scale
        return s * sum((Fraction(a) * b for a, b in zip(ambient_vector, self.gamma_vec)), Fraction(0))

    def character(self, coords: Sequence[int]) -> int:
        """3⟨γ, v⟩ mod 3 for v in M given by basis coordinates"""
        value = 3 * self.pairing(self.m.ambient(coords))
        if value.denominator != 1:
            raise ValueError(f"3⟨γ, v⟩ = {value} is not integral")
        return value.numerator % 3


@lru_cache(maxsize=None)
def k_sublattice_3C() -> K3CData:
    model = e8_a8_plus_three()
    m = Lattice.from_basis(model.lattice.embedding.basis, 2, name="EE8[A8]")
    k = SublatticeHandle(m, model.sub.rows, "AA8")
    beta_vec = tuple(base_symbols("A8")["gamma"])
    gamma_vec = tuple([Fraction(1, 9)] * 8 + [Fraction(-8, 9)])
    data = K3CData(m, k, beta_vec, gamma_vec)
    if index(k) != 3:
        raise ConstructionError(f"[M : K] = {index(k)}, expected 3")
    if any(data.character(row) for row in k.rows.to_ints()):
        raise ConstructionError("γ does not pair integrally with K")
    if data.character(m.lattice_coordinates(beta_vec)) == 0:
        raise ConstructionError("β lies in the kernel of the character")
    return data


def m4_set(lattice: Lattice) -> ShortVectorSet:
    """M(4), the norm-4 vectors of an even lattice with minimum 4.

    Raises:
        ValueError: if the lattice has roots
    """
    found = short_vectors(lattice, 4)
    if found.restricted(2).count:
        raise ValueError(f"{lattice.name} has roots; M(4) needs minimum 4")
    return found.restricted(4)


def phi_sign(x: Sequence[Fraction], alpha: Sequence[int], lattice: Lattice) -> int:
    """(−1)^⟨x, α⟩ for x in ½M (rational basis coordinates) and α in M.

    Raises:
        ValueError: if ⟨x, α⟩ is not an integer
    """
    value = lattice.inner([Fraction(v) for v in x], alpha)
    if value.denominator != 1:
        raise ValueError(f"⟨x, α⟩ = {value} is not an integer; x is not in ½M")
    return 1 if value.numerator % 2 == 0 else -1


@dataclass(frozen=True)
class Refusal:
    """A map that failed to preserve the lattice, with a basis vector whose image leaves it"""
    reason: str
    witness: Tuple[int, ...]


def miyamoto_isometry(lattice: Lattice, m: SublatticeHandle) -> Union[Isometry, Refusal]:
    """−1 on ℚ⊗M and +1 on its orthogonal complement, if that preserves the lattice"""
    s = m.rows
    g = lattice.gram
    projection = g @ s.T @ inverse(s @ g @ s.T) @ s
    t = RatMat.identity(lattice.rank) - projection * 2
    for i, row in enumerate(t):
        if any(x.denominator != 1 for x in row):
            witness = tuple(1 if j == i else 0 for j in range(lattice.rank))
            logger.debug("miyamoto map refused on %s: basis vector %d", m.name, i)
            return Refusal(f"image of basis vector {i} is not in {lattice.name}", witness)
    return Isometry(lattice, t)


def doubly_even_classes(lattice: Lattice) -> List[np.ndarray]:
    """Split the norm-4 vectors into classes spanning doubly even sublattices.

    For A2⊗E8 these are the three sets α⊗E8(2), one per root pair ±α.
    Within a class all inner products are even; a vector outside a class
    pairs oddly with some member of it. Vectors are returned with both
    signs, as rows of lattice coordinates.
    """
    gi, d = lattice.integer_gram
    if d != 1:
        raise ValueError(f"{lattice.name} is not integral")
    vectors = m4_set(lattice).expanded
    products = vectors @ gi @ vectors.T
    remaining = np.ones(len(vectors), dtype=bool)
    classes = []
    while remaining.any():
        u = int(np.argmax(remaining))
        near = np.flatnonzero(remaining & (np.abs(products[u]) == 2))
        sub = products[np.ix_(near, near)] % 2
        odd = sub.sum(axis=1)
        anchors = np.append(near[2 * odd < len(near)], u)
        members = remaining & (products[:, anchors] % 2 == 0).all(axis=1)
        classes.append(vectors[members])
        remaining &= ~members
    logger.debug("%s: %d norm-4 classes of sizes %s", lattice.name, len(classes),
                 [len(c) for c in classes])
    return classes


def ee8_sublattices(parent: Lattice, handle: SublatticeHandle) -> List[SublatticeHandle]:
    """The doubly even classes of handle.lattice, as sublattices of parent"""
    found = []
    for i, cls in enumerate(doubly_even_classes(handle.lattice)):
        rows = RatMat(cls.tolist(), cols=handle.rank) @ handle.rows
        found.append(sublattice(parent, rows, name=f"{handle.name}/EE8[{i}]"))
    return found
