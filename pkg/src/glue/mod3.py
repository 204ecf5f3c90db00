"""
Mod-3 Quadratic Spaces
Forms over the 3-element field: discriminant forms, L/3L, fixed spaces, and the glue sampler
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from ..exactla import det_mod_p, left_nullspace_mod_p, matmul_mod_p
from ..lattice import Isometry, Lattice
from .discriminant import DiscriminantGroup, GlueError
from .gluemap import GlueMap

logger = logging.getLogger(__name__)

P = 3
Rows = List[List[int]]


@dataclass(frozen=True)
class Mod3Space:
    """F_3^dim with a symmetric bilinear form"""
    dim: int
    form: tuple

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Mod3Space":
        return cls(len(rows), tuple(tuple(int(x) % P for x in r) for r in rows))

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.form[i][j] * y[j] for i in range(self.dim) for j in range(self.dim)) % P

    def restrict(self, basis: Sequence[Sequence[int]]) -> "Mod3Space":
        """Form on the span of basis rows, in that basis"""
        if not basis:
            return Mod3Space(0, ())
        gram = matmul_mod_p(matmul_mod_p(basis, self.form, P), [list(c) for c in zip(*basis)], P)
        return Mod3Space.from_rows(gram)

    def is_nonsingular(self) -> bool:
        return self.dim == 0 or det_mod_p(self.form, P) != 0

    def orthogonal_complement(self, basis: Sequence[Sequence[int]]) -> Rows:
        """Basis of {x : x·F·bᵀ = 0 for every basis row b}"""
        if not basis:
            return [[1 if i == j else 0 for j in range(self.dim)] for i in range(self.dim)]
        columns = matmul_mod_p(self.form, [list(c) for c in zip(*basis)], P)
        return left_nullspace_mod_p(columns, P)


def bilinear_form_mod3(group: DiscriminantGroup, sign: int = 1) -> Rows:
    """3·b(e_i, e_j) mod 3 for a 3-elementary discriminant group"""
    if not group.is_elementary(P):
        raise GlueError(f"{group.lattice.name}: discriminant group is not 3-elementary")
    return [[int(sign * P * group.bilinear(group.unit(i), group.unit(j))) % P
             for j in range(group.rank)] for i in range(group.rank)]


def mod3_space(source: Union[DiscriminantGroup, Lattice]) -> Mod3Space:
    """𝒟L with 3·(bilinear form), or L/3L with the Gram form mod 3"""
    if isinstance(source, DiscriminantGroup):
        return Mod3Space.from_rows(bilinear_form_mod3(source))
    if not source.is_integral:
        raise GlueError(f"{source.name}: L/3L needs an integral lattice")
    return Mod3Space.from_rows(source.gram.to_ints())


def mod3_matrix(g: Isometry) -> Rows:
    return g.mod(P)


@dataclass(frozen=True)
class FixedSpaceReport:
    dim: int
    nonsingular: bool
    complement_dim: int
    complement_nonsingular: bool
    basis: tuple


def fixed_space_mod3(generators: Sequence[Union[Isometry, Sequence[Sequence[int]]]],
                     space: Optional[Mod3Space] = None) -> FixedSpaceReport:
    """Common fixed space of the generators over F_3 (row convention x·g = x).

    Nonsingularity of the fixed space and of its orthogonal complement is
    measured in space, which defaults to L/3L of the generators' lattice.
    """
    mats = [mod3_matrix(g) if isinstance(g, Isometry) else [[int(x) % P for x in r] for r in g]
            for g in generators]
    if space is None:
        first = next((g for g in generators if isinstance(g, Isometry)), None)
        if first is None:
            raise GlueError("a space is needed when no isometry is given")
        space = mod3_space(first.lattice)
    n = space.dim
    if mats:
        stacked = [[] for _ in range(n)]
        for m in mats:
            for i in range(n):
                stacked[i].extend((m[i][j] - (1 if i == j else 0)) % P for j in range(n))
        basis = left_nullspace_mod_p(stacked, P)
    else:
        basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    complement = space.orthogonal_complement(basis)
    return FixedSpaceReport(
        dim=len(basis),
        nonsingular=space.restrict(basis).is_nonsingular(),
        complement_dim=len(complement),
        complement_nonsingular=space.restrict(complement).is_nonsingular(),
        basis=tuple(tuple(r) for r in basis),
    )


def _random_vector(rng: np.random.Generator, basis: Rows) -> List[int]:
    while True:
        coeffs = rng.integers(0, P, size=len(basis))
        if coeffs.any():
            return [int(x) for x in (coeffs @ np.array(basis, dtype=np.int64)) % P]


def random_valid_glue(source: DiscriminantGroup, target: DiscriminantGroup, seed: int,
                      max_tries: int = 1000) -> GlueMap:
    """Random even totally singular full glue between two 3-elementary groups.

    Builds an isometry (F_3^k, b_source) → (F_3^k, −b_target) one orthogonal
    step at a time: a random anisotropic x, a random y of the same norm, then
    both spaces shrink to the orthogonal complements. Deterministic in seed.

    Raises:
        GlueError: if the forms are not anti-isometric
    """
    if source.order != target.order:
        raise GlueError("discriminant groups have different orders")
    form_a = Mod3Space.from_rows(bilinear_form_mod3(source))
    form_b = Mod3Space.from_rows(bilinear_form_mod3(target, sign=-1))
    if not (form_a.is_nonsingular() and form_b.is_nonsingular()):
        raise GlueError("discriminant forms must be nondegenerate")
    rng = np.random.default_rng(seed)
    k = source.rank
    space_a = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    space_b = [list(r) for r in space_a]
    xs, ys = [], []
    while space_a:
        for _ in range(max_tries):
            x = _random_vector(rng, space_a)
            if form_a.pair(x, x):
                break
        else:
            raise GlueError("no anisotropic vector found")
        for _ in range(max_tries):
            y = _random_vector(rng, space_b)
            if form_b.pair(y, y) == form_a.pair(x, x):
                break
        else:
            raise GlueError("forms are not anti-isometric")
        xs.append(x)
        ys.append(y)
        space_a = _complement_within(form_a, space_a, x)
        space_b = _complement_within(form_b, space_b, y)
    glue = GlueMap(source, target, xs, ys)
    logger.debug("random glue with seed %d: order %d", seed, glue.order)
    return glue


def _complement_within(form: Mod3Space, basis: Rows, vector: Sequence[int]) -> Rows:
    """{c·basis : form(c·basis, vector) = 0}"""
    column = [[form.pair(row, vector)] for row in basis]
    coeffs = left_nullspace_mod_p(column, P)
    if not coeffs:
        return []
    return matmul_mod_p(coeffs, basis, P)

