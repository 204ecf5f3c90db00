"""
Discriminant Groups
L*/L with its Q/Z bilinear and Q/2Z quadratic forms, and the automorphisms isometries induce on it
"""

import itertools
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm, prod
from typing import Iterator, List, Optional, Sequence, Tuple

from ..exactla import RatMat, Rational, inverse, snf, to_fraction
from ..lattice import Isometry, Lattice

Element = Tuple[int, ...]

MAX_AUT_ORDER = 1_000_000


class GlueError(ValueError):
    """Invalid glue data"""


class NotASimilitudeError(GlueError):
    """A map does not scale the discriminant form by a constant"""


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def mod2(x: Fraction) -> Fraction:
    return x - 2 * (x.numerator // (2 * x.denominator))


class DiscriminantGroup:
    """L*/L ≅ ⊕ Z/d_i for the invariant factors d_i > 1 of the Gram matrix.

    With U·G·V = D (Smith form), a dual vector y has coordinates
    (y·G·V)_i mod d_i and generator i lifts to e_i·V⁻¹·G⁻¹.
    """

    def __init__(self, lattice: Lattice):
        if not lattice.is_integral:
            raise GlueError(f"{lattice.name}: discriminant group needs an integral lattice")
        self.lattice = lattice
        result = snf(lattice.gram.to_ints())
        diag = result.diagonal
        self._keep = [i for i, d in enumerate(diag) if abs(d) != 1]
        self.invariant_factors: List[int] = [abs(diag[i]) for i in self._keep]
        self._gv = lattice.gram @ result.v
        lifts = inverse(result.v) @ inverse(lattice.gram)
        self.generator_lifts = lifts.take_rows(self._keep) if self._keep else RatMat((), cols=lattice.rank)
        self._products = self.generator_lifts @ lattice.gram @ self.generator_lifts.T if self._keep else None

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.invariant_factors) if self.invariant_factors else 1

    def is_elementary(self, p: int) -> bool:
        return all(d == p for d in self.invariant_factors)

    def zero(self) -> Element:
        return tuple(0 for _ in self.invariant_factors)

    def normalize(self, x: Sequence[int]) -> Element:
        return tuple(int(a) % d for a, d in zip(x, self.invariant_factors))

    def add(self, x: Sequence[int], y: Sequence[int]) -> Element:
        return self.normalize([a + b for a, b in zip(x, y)])

    def scale(self, k: int, x: Sequence[int]) -> Element:
        return self.normalize([k * a for a in x])

    def elements(self) -> Iterator[Element]:
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def unit(self, i: int) -> Element:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def coords(self, y: Sequence[Rational]) -> Element:
        """Class of a dual vector given in lattice basis coordinates"""
        z = self._gv.vecmul([to_fraction(v) for v in y])
        picked = [z[i] for i in self._keep]
        if any(c.denominator != 1 for c in picked):
            raise GlueError(f"{tuple(y)} is not in the dual lattice of {self.lattice.name}")
        return self.normalize([c.numerator for c in picked])

    def lift(self, x: Sequence[int]) -> Tuple[Fraction, ...]:
        n = self.lattice.rank
        total = [Fraction(0)] * n
        for xi, row in zip(x, self.generator_lifts):
            if xi:
                total = [t + xi * r for t, r in zip(total, row)]
        return tuple(total)

    def _pairing(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self._products[i]
                total += xi * sum((row[j] * yj for j, yj in enumerate(y) if yj), Fraction(0))
        return total

    def bilinear(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Value in [0, 1)"""
        if not self.rank:
            return Fraction(0)
        return mod1(self._pairing(x, y))

    def quadratic(self, x: Sequence[int]) -> Fraction:
        """Value in [0, 2); well defined for even lattices"""
        if not self.rank:
            return Fraction(0)
        return mod2(self._pairing(x, x))

    def automorphism(self, g: Isometry) -> "DiscriminantAutomorphism":
        """π(g): the map induced by an isometry of the lattice"""
        images = [self.coords(g.matrix.vecmul(lift)) for lift in self.generator_lifts]
        return DiscriminantAutomorphism(self, tuple(images))

    def __repr__(self) -> str:
        return f"DiscriminantGroup({self.lattice.name!r}, {self.invariant_factors})"


class DiscriminantAutomorphism:
    """Group endomorphism given by the images of the generators; x ↦ Σ x_i·images_i"""

    def __init__(self, group: DiscriminantGroup, images: Sequence[Sequence[int]]):
        if len(images) != group.rank:
            raise GlueError(f"expected {group.rank} generator images, got {len(images)}")
        self.group = group
        self.images: Tuple[Element, ...] = tuple(group.normalize(x) for x in images)

    @classmethod
    def identity(cls, group: DiscriminantGroup) -> "DiscriminantAutomorphism":
        return cls(group, [group.unit(i) for i in range(group.rank)])

    @classmethod
    def scalar(cls, group: DiscriminantGroup, k: int) -> "DiscriminantAutomorphism":
        return cls(group, [group.scale(k, group.unit(i)) for i in range(group.rank)])

    def apply(self, x: Sequence[int]) -> Element:
        total = [0] * self.group.rank
        for xi, img in zip(x, self.images):
            if xi:
                total = [t + xi * v for t, v in zip(total, img)]
        return self.group.normalize(total)

    def compose(self, other: "DiscriminantAutomorphism") -> "DiscriminantAutomorphism":
        """self first, then other"""
        return DiscriminantAutomorphism(self.group, [other.apply(img) for img in self.images])

    def is_identity(self) -> bool:
        return self == DiscriminantAutomorphism.identity(self.group)

    @cached_property
    def order(self) -> int:
        current = self
        for k in range(1, MAX_AUT_ORDER + 1):
            if current.is_identity():
                return k
            current = current.compose(self)
        raise GlueError("map is not invertible or has excessive order")

    def power(self, k: int) -> "DiscriminantAutomorphism":
        if k < 0:
            return self.inverse().power(-k)
        result = DiscriminantAutomorphism.identity(self.group)
        base = self
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def inverse(self) -> "DiscriminantAutomorphism":
        return self.power(self.order - 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiscriminantAutomorphism):
            return NotImplemented
        return self.group is other.group and self.images == other.images

    def __hash__(self) -> int:
        return hash((id(self.group), self.images))

    def __repr__(self) -> str:
        return f"DiscriminantAutomorphism({self.group.lattice.name!r})"


def similitude_scale(g: DiscriminantAutomorphism) -> int:
    """The unit λ mod the exponent with b(gx, gy) = λ·b(x, y).

    Raises:
        NotASimilitudeError: if no such λ exists
    """
    group = g.group
    e = group.exponent
    pairs = [(i, j) for i in range(group.rank) for j in range(i, group.rank)]
    values = [(group.bilinear(group.unit(i), group.unit(j)),
               group.bilinear(g.images[i], g.images[j])) for i, j in pairs]
    for lam in range(1, e + 1):
        if gcd(lam, e) != 1:
            continue
        if all(mod1(lam * before) == after for before, after in values):
            return lam % e if e > 1 else 1
    raise NotASimilitudeError("map does not scale the bilinear form by a unit")


def discriminant_group(lattice: Lattice) -> DiscriminantGroup:
    return DiscriminantGroup(lattice)
