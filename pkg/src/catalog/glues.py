"""
Glues of Q and R
The standard pair Q = A2⊗E8, R = √3E8, the M(φ) family of E8³ overlattices and the Leech glue β
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from ..exactla import RatMat, inverse
from ..glue import DiscriminantGroup, GlueMap, glue_from_basis, glue_overlattice, is_even_glue
from ..lattice import Isometry, Lattice, annihilator, fixed_sublattice, isometric, scale, tensor
from .data import ConstructionError
from .leech import leech_with_h
from .root_lattices import root_lattice

logger = logging.getLogger(__name__)

# class of (1/3)(α1 − α2) in 𝒟(A2), in simple-root coordinates
A2_GLUE_COORDS = (Fraction(1, 3), Fraction(-1, 3))


@lru_cache(maxsize=None)
def q_std() -> Lattice:
    """A2⊗E8; basis α_i⊗b_j at index 8i + j"""
    return tensor(root_lattice("A", 2), root_lattice("E", 8)).renamed("Q")


@lru_cache(maxsize=None)
def r_std() -> Lattice:
    """√3E8 in the simple-root basis of E8"""
    return scale(root_lattice("E", 8), 3).renamed("R")


@lru_cache(maxsize=None)
def q_group() -> DiscriminantGroup:
    return DiscriminantGroup(q_std())


@lru_cache(maxsize=None)
def r_group() -> DiscriminantGroup:
    return DiscriminantGroup(r_std())


def _phi_matrix(phi: Optional[Union[Isometry, RatMat]]) -> RatMat:
    e8 = root_lattice("E", 8)
    if phi is None:
        return RatMat.identity(8)
    m = phi.matrix if isinstance(phi, Isometry) else phi
    if m.shape != (8, 8) or not m.is_integral():
        raise ValueError("φ must be an integral 8×8 matrix in E8 coordinates")
    # φ: E8 → R triples norms iff m preserves the E8 form
    if m @ e8.gram @ m.T != e8.gram:
        raise ValueError("φ does not triple norms")
    return m


def m_phi_glue(phi: Optional[Union[Isometry, RatMat]] = None) -> GlueMap:
    """ψ_φ: class of ⅓(α1−α2)⊗e ↦ class of ⅓φ(e)"""
    m = _phi_matrix(phi)
    dq, dr = q_group(), r_group()
    a_gens, b_gens = [], []
    for j in range(8):
        coords = [Fraction(0)] * 16
        coords[j] = A2_GLUE_COORDS[0]
        coords[8 + j] = A2_GLUE_COORDS[1]
        a_gens.append(dq.coords(coords))
        b_gens.append(dr.coords([x / 3 for x in m.row(j)]))
    glue = GlueMap(dq, dr, a_gens, b_gens)
    if not (glue.is_full() and is_even_glue(glue)):
        raise ConstructionError("M(φ) glue is not a full even glue")
    return glue


def m_phi(phi: Optional[Union[Isometry, RatMat]] = None) -> Lattice:
    """M(φ) = Q + R + {(⅓(α_k − α_{k+1})⊗e, ⅓φ(e))}; even unimodular with root system E8³"""
    lattice = glue_overlattice(q_std(), r_std(), m_phi_glue(phi), name="M(phi)")
    if not (lattice.is_even and lattice.is_unimodular):
        raise ConstructionError("M(φ) is not even unimodular")
    return lattice


@lru_cache(maxsize=None)
def alpha_glue() -> GlueMap:
    """The M(φ) glue for φ the identity"""
    return m_phi_glue(None)


@lru_cache(maxsize=None)
def leech_decomposition(seed: int = 0, budget_seconds: Optional[float] = None
                        ) -> Tuple[Isometry, Isometry]:
    """Isometries Q_std → ann_Λ(Λ^h) and R_std → Λ^h.

    Raises:
        ConstructionError: if either piece has the wrong isometry class
    """
    lattice, h = leech_with_h(seed)
    r_l = fixed_sublattice(lattice, h, name="R_L")
    q_l = annihilator(lattice, r_l, name="Q_L")
    t_q = isometric(q_std(), q_l.lattice, budget_seconds=budget_seconds)
    t_r = isometric(r_std(), r_l.lattice, budget_seconds=budget_seconds)
    if t_q is None or t_r is None:
        raise ConstructionError("Λ^h or its annihilator is not of the expected isometry class")
    return t_q, t_r


@lru_cache(maxsize=None)
def beta_glue(seed: int = 0, budget_seconds: Optional[float] = None) -> GlueMap:
    """Glue Q_std → R_std whose overlattice is Λ, transported from leech_with_h"""
    lattice, h = leech_with_h(seed)
    r_l = fixed_sublattice(lattice, h, name="R_L")
    q_l = annihilator(lattice, r_l, name="Q_L")
    t_q, t_r = leech_decomposition(seed, budget_seconds)
    # Λ's basis in Q_L ⊥ R_L coordinates, then pulled back to Q_std ⊥ R_std
    in_sum = inverse(RatMat.vstack(q_l.rows, r_l.rows))
    back = RatMat.block_diagonal(inverse(t_q.matrix), inverse(t_r.matrix))
    glue = glue_from_basis(q_group(), r_group(), in_sum @ back)
    if not glue.is_full():
        raise ConstructionError(f"Leech glue has order {glue.order}, expected 3^8")
    logger.info("β read off Λ (seed %d)", seed)
    return glue


def l_beta(seed: int = 0, budget_seconds: Optional[float] = None) -> Lattice:
    return glue_overlattice(q_std(), r_std(), beta_glue(seed, budget_seconds), name="L(beta)")
