"""
Permutation Actions
Isometries acting on a fully ±-expanded short vector set
"""

from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..exactla import RatMat, inverse, rank
from ..lattice import Isometry, Lattice, NotAnIsometryError
from ..shortvec import ShortVectorSet
from .perm import Perm


class PointSetError(ValueError):
    """An isometry does not map the point set onto itself"""

    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class PermAction:
    """Action of isometries of a lattice on the points ±v of a ShortVectorSet.

    Point 2i is the stored representative v_i and point 2i+1 is −v_i.
    """

    def __init__(self, points: ShortVectorSet):
        self.points = points
        self.lattice: Lattice = points.lattice
        self.array = points.expanded
        self.index: Dict[Tuple[int, ...], int] = {
            tuple(int(x) for x in row): i for i, row in enumerate(self.array)
        }

    @property
    def degree(self) -> int:
        return len(self.array)

    def point(self, i: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.array[i])

    def perm_from_matrix(self, matrix: RatMat) -> Perm:
        images = self.array @ np.array(matrix.to_ints(), dtype=np.int64)
        perm = []
        for row in images:
            key = tuple(int(x) for x in row)
            j = self.index.get(key)
            if j is None:
                raise PointSetError(f"image {key} is not in the point set", key)
            perm.append(j)
        return tuple(perm)

    def perm_from_isometry(self, g: Isometry) -> Perm:
        return self.perm_from_matrix(g.matrix)

    @cached_property
    def spanning_indices(self) -> List[int]:
        """Indices of points forming a basis of the rational span"""
        chosen: List[int] = []
        current = 0
        for i in range(0, self.degree, 2):
            trial = chosen + [i]
            r = rank(RatMat([self.point(j) for j in trial]))
            if r > current:
                chosen, current = trial, r
                if current == self.lattice.rank:
                    break
        if current != self.lattice.rank:
            raise PointSetError("points do not span the lattice; the action is not faithful")
        return chosen

    @cached_property
    def _spanning_inverse(self) -> RatMat:
        return inverse(RatMat([self.point(j) for j in self.spanning_indices]))

    def isometry_from_perm(self, perm: Sequence[int]) -> Isometry:
        """The isometry inducing perm, recovered from the images of a spanning set"""
        images = RatMat([self.point(perm[j]) for j in self.spanning_indices])
        matrix = self._spanning_inverse @ images
        if not matrix.is_integral():
            raise NotAnIsometryError("permutation is not induced by an integral map")
        g = Isometry(self.lattice, matrix)
        if self.perm_from_isometry(g) != tuple(perm):
            raise NotAnIsometryError("permutation is not induced by a linear map")
        return g


def perm_from_isometry(lattice: Lattice, points: ShortVectorSet, g: Isometry) -> Perm:
    if points.lattice is not lattice:
        raise ValueError("point set belongs to a different lattice")
    return PermAction(points).perm_from_isometry(g)
