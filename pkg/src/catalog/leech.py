"""
Leech Lattice
Λ from the Golay code at ambient scale 1/8, and an order-3 coordinate permutation of shape 3^8
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from ..lattice import (
    Isometry, Lattice, has_fixed_points, isometry_from_ambient, permutation_matrix, trace,
)
from ..permgrp import Perm
from .codes import GOLAY_LENGTH, golay24, golay_element_3_8
from .data import ConstructionError

logger = logging.getLogger(__name__)

LEECH_SCALE = Fraction(1, 8)


@lru_cache(maxsize=None)
def leech() -> Lattice:
    """Span of 2·c (c in the Golay code), 4(±e_i ± e_j) and (−3, 1²³), with form x·y/8"""
    n = GOLAY_LENGTH
    gens = [[2 * x for x in row] for row in golay24().generators]
    for i in range(n - 1):
        gens.append([4 if j == i else (-4 if j == i + 1 else 0) for j in range(n)])
    gens.append([4 if j in (n - 2, n - 1) else 0 for j in range(n)])
    gens.append([-3] + [1] * (n - 1))
    lattice = Lattice.from_generators(gens, LEECH_SCALE, name="Leech")
    if not (lattice.rank == n and lattice.is_even and lattice.is_unimodular):
        raise ConstructionError("Leech construction is not even unimodular of rank 24")
    return lattice


@lru_cache(maxsize=None)
def leech_h_permutation(seed: int = 0) -> Perm:
    return golay_element_3_8(seed)


@lru_cache(maxsize=None)
def leech_with_h(seed: int = 0) -> Tuple[Lattice, Isometry]:
    """Λ with an order-3 isometry of trace 0 permuting the coordinates in eight 3-cycles.

    Raises:
        ConstructionError: if the seeded element search fails or h has the wrong shape
    """
    lattice = leech()
    perm = leech_h_permutation(seed)
    h = isometry_from_ambient(lattice, permutation_matrix(perm))
    if trace(h) != 0 or not h.power(3).is_identity():
        raise ConstructionError(f"h has trace {trace(h)} or wrong order (seed {seed})")
    if not has_fixed_points(h):
        raise ConstructionError("h has no fixed sublattice")
    logger.debug("leech h from seed %d: %s", seed, perm)
    return lattice, h
