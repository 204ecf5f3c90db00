"""
Common Stabilizers
Orbit/stabilizer over arbitrary actions and the joint stabilizer of two glues of Q ⊥ R
"""

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..exactla import RatMat
from ..glue import DiscriminantAutomorphism, DiscriminantGroup, GlueMap, glue_overlattice, twist
from ..lattice import Isometry, Lattice, reflection
from ..shortvec import extended_path_subsystem, minimum, root_count, short_vectors, simple_roots
from .action import PermAction
from .bsgs import Bsgs, derived_subgroup, extend, schreier_sims
from .perm import Perm, compose, identity_perm, invert, is_identity

logger = logging.getLogger(__name__)

Action = Callable[[int, Hashable], Hashable]


def orbit_stabilizer(generators: Sequence[Perm], point: Hashable, act: Action, degree: int,
                     known_order: Optional[int] = None) -> Tuple[int, Bsgs]:
    """Orbit length of point and the stabilizer chain, by Schreier generators.

    generators act faithfully on range(degree); act(i, x) is the image of x
    under generator i in the (possibly different) action being stabilized.
    With known_order the loop stops as soon as orbit and stabilizer account
    for the whole group.
    """
    transversal: Dict[Hashable, Perm] = {point: identity_perm(degree)}
    queue = [point]
    chain = schreier_sims([], degree)
    for x in queue:
        u = transversal[x]
        for i, g in enumerate(generators):
            y = act(i, x)
            ug = compose(u, g)
            if y not in transversal:
                transversal[y] = ug
                queue.append(y)
                continue
            s = compose(ug, invert(transversal[y]))
            if not is_identity(s) and not chain.contains(s):
                chain = extend(chain, s)
        if known_order is not None and len(transversal) * chain.order == known_order:
            break
    logger.debug("orbit_stabilizer: orbit %d, stabilizer %d", len(transversal), chain.order)
    return len(transversal), chain


def conjugating_perm(source: Sequence[Perm], target: Sequence[Perm], start: int,
                     image: int) -> Optional[Perm]:
    """w with w∘source_i = target_i∘w (as maps) and w(start) = image, or None.

    The generators in source must act transitively.
    """
    degree = len(source[0])
    w: Dict[int, int] = {start: image}
    queue = [start]
    for y in queue:
        for s, t in zip(source, target):
            y2, w2 = s[y], t[w[y]]
            if y2 in w:
                if w[y2] != w2:
                    return None
                continue
            w[y2] = w2
            queue.append(y2)
    if len(w) != degree or len(set(w.values())) != degree:
        return None
    return tuple(w[i] for i in range(degree))


def centralizer_in(chain: Bsgs, generators: Sequence[Perm]) -> List[Perm]:
    """Elements of chain's group commuting with every generator (transitive action)"""
    found = []
    for q in range(chain.degree):
        z = conjugating_perm(generators, generators, 0, q)
        if z is not None and chain.contains(z):
            found.append(z)
    return found


class _ElementIndex:
    """Dense indexing of a 3-elementary discriminant group"""

    def __init__(self, group: DiscriminantGroup):
        self.group = group
        self.elements = list(group.elements())
        self.index = {x: i for i, x in enumerate(self.elements)}

    def perm(self, g: DiscriminantAutomorphism) -> np.ndarray:
        return np.array([self.index[g.apply(x)] for x in self.elements], dtype=np.int32)


@dataclass
class CommonStabilizerReport:
    """Orders and orbit data of O(L_α) ∩ O(L_β) acting on Q ⊥ R"""
    o_r_order: int
    o_q_order: int
    pi_o_q_order: int
    kernel_order: int
    set_orbit_length: int
    r_side_order: int
    order: Optional[int]
    derived_subgroup_order: int
    center_order: int
    orbit_lengths: List[int]
    point_stabilizer_order: int
    point_stabilizer_derived_order: int
    conjugator_found: bool
    generators_verified: bool
    odd_element_stabilizes_alpha: bool
    odd_element_stabilizes_beta: bool
    odd_twist_root_count: int
    alpha: Optional[GlueMap] = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, object]:
        data = asdict(self)
        data.pop("alpha")
        return data


class _Side:
    """O(lattice) acting on its minimal vectors, with π into the discriminant group"""

    def __init__(self, lattice: Lattice, generators: Sequence[Isometry]):
        self.lattice = lattice
        m = minimum(lattice)
        self.action = PermAction(short_vectors(lattice, m).restricted(m))
        self.generators = list(generators)
        self.perms = [self.action.perm_from_isometry(g) for g in self.generators]
        self.chain = schreier_sims(self.perms, self.action.degree)
        self.group = DiscriminantGroup(lattice)

    def pi(self, g: Isometry) -> DiscriminantAutomorphism:
        return self.group.automorphism(g)


def _class_perm(classes: Sequence[Tuple[int, ...]], lookup: Dict[Tuple[int, ...], int],
                g: DiscriminantAutomorphism) -> Perm:
    """Permutation of a class list induced by g; KeyError if the list is not preserved"""
    return tuple(lookup[g.apply(c)] for c in classes)


def _transfer(glue: GlueMap, other: GlueMap) -> DiscriminantAutomorphism:
    """other ∘ glue⁻¹ as an automorphism of the common target group"""
    back = glue.inverse()
    target = glue.target
    return DiscriminantAutomorphism(target, [other.apply(back.apply(target.unit(i)))
                                             for i in range(target.rank)])


def common_stabilizer_report(a2: Lattice, e8: Lattice, q: Lattice, r: Lattice, alpha: GlueMap,
                             beta: GlueMap) -> CommonStabilizerReport:
    """Joint stabilizer of two full glues Q → R inside O(Q) × O(R).

    q must be tensor(a2, e8) and r must be e8 scaled by 3 in the same basis,
    and alpha must intertwine 1⊗w on q with w on r (as the glue of the M(φ)
    family with φ the identity does). The group is computed as the kernel U
    of π on O(Q) times the set of r in π(O(R)) for which the matching map
    on 𝒟Q is also induced by O(Q). alpha is replaced by the twist π(w)∘alpha
    under which that whole set stabilizes both glues; w is found by solving
    for a permutation conjugating the two representations on the roots of r.
    """
    n = e8.rank
    e8_roots = short_vectors(e8, 2).restricted(2)
    e8_simple = simple_roots(list(PermAction(e8_roots).index))
    r_gens = [reflection(r, root) for root in e8_simple]
    side_r = _Side(r, r_gens)
    o_r = side_r.chain
    logger.info("O(R): order %d on %d roots", o_r.order, side_r.action.degree)

    a2_simple = simple_roots(list(PermAction(short_vectors(a2, 2).restricted(2)).index))
    a2_refl = [reflection(a2, root).matrix for root in a2_simple]
    ident_a2, ident_e8 = RatMat.identity(a2.rank), RatMat.identity(n)
    q_gens = ([Isometry(q, RatMat.kron(m, ident_e8)) for m in a2_refl]
              + [Isometry(q, RatMat.kron(-ident_a2, ident_e8))]
              + [Isometry(q, RatMat.kron(ident_a2, g.matrix)) for g in r_gens])
    side_q = _Side(q, q_gens)
    o_q = side_q.chain
    logger.info("O(Q): order %d on %d points", o_q.order, side_q.action.degree)

    # classes of (1/3)·root in 𝒟R, and their α-preimages in 𝒟Q
    dg_r, dg_q = side_r.group, side_q.group
    r_classes = [dg_r.coords([Fraction(x, 3) for x in side_r.action.point(i)])
                 for i in range(side_r.action.degree)]
    r_lookup = {c: i for i, c in enumerate(r_classes)}
    back = alpha.inverse()
    q_classes = [back.apply(c) for c in r_classes]
    q_lookup = {c: i for i, c in enumerate(q_classes)}
    pi_q_chain = schreier_sims([_class_perm(q_classes, q_lookup, side_q.pi(g)) for g in q_gens],
                               len(q_classes))
    kernel_order = o_q.order // pi_q_chain.order
    logger.info("π(O(Q)) has order %d; kernel of order %d", pi_q_chain.order, kernel_order)

    # H: elements of π(O(R)) keeping u(S_R) as a set, u = β∘α⁻¹
    u = _transfer(alpha, beta)
    u_inv = u.inverse()
    elements = _ElementIndex(dg_r)
    element_perms = [elements.perm(side_r.pi(g)) for g in r_gens]
    moved = frozenset(elements.index[u.apply(c)] for c in r_classes)
    set_orbit, h_chain = orbit_stabilizer(
        side_r.perms, moved,
        lambda i, s: frozenset(int(element_perms[i][x]) for x in s),
        side_r.action.degree, known_order=o_r.order)
    logger.info("set orbit %d, stabilizer H of order %d", set_orbit, h_chain.order)

    h_gens = h_chain.strong_generators
    h_isos = [side_r.action.isometry_from_perm(p) for p in h_gens]
    transported = [_class_perm(r_classes, r_lookup, u.compose(side_r.pi(g)).compose(u_inv))
                   for g in h_isos]

    w = None
    for source, target, invert_result in ((transported, h_gens, False), (h_gens, transported, True)):
        for image in range(side_r.action.degree):
            cand = conjugating_perm(source, target, 0, image)
            if cand is not None and o_r.contains(cand):
                w = invert(cand) if invert_result else cand
                break
        if w is not None:
            break

    twisted = alpha
    verified = False
    if w is not None:
        w_iso = side_r.action.isometry_from_perm(w)
        twisted = twist(alpha, None, side_r.pi(w_iso))
        pairs = []
        for p, c in zip(h_isos, transported):
            c_iso = side_r.action.isometry_from_perm(c)
            pairs.append((Isometry(q, RatMat.kron(ident_a2, c_iso.matrix)), p))
        rotation = a2_refl[0] @ a2_refl[1]
        pairs.append((Isometry(q, RatMat.kron(rotation, ident_e8)), Isometry.identity(r)))
        pairs.append((Isometry(q, RatMat.kron(-a2_refl[0], ident_e8)), Isometry.identity(r)))
        verified = all(
            twist(glue, side_q.pi(gq), side_r.pi(gr)) == glue
            for gq, gr in pairs for glue in (twisted, beta))
    else:
        logger.warning("no conjugating root permutation found; α left untwisted")

    derived = derived_subgroup(h_chain)
    root_stab = derived.stabilizer(0)
    center = centralizer_in(h_chain, h_gens)

    # odd element: a reflection in a root of the A8 inside E8, acting diagonally via α
    a8 = extended_path_subsystem(e8, [side_r.action.point(i) for i in range(side_r.action.degree)])
    s_r = reflection(r, a8[0])
    s_perm = side_r.action.perm_from_isometry(s_r)
    w_perm = w if w is not None else identity_perm(side_r.action.degree)
    c_perm = compose(compose(w_perm, s_perm), invert(w_perm))
    s_q = Isometry(q, RatMat.kron(ident_a2, side_r.action.isometry_from_perm(c_perm).matrix))
    pq, pr = side_q.pi(s_q), side_r.pi(s_r)
    odd_alpha = twist(twisted, pq, pr) == twisted
    odd_beta = twist(beta, pq, pr) == beta
    odd_roots = root_count(glue_overlattice(q, r, twist(twisted, pq, None)))

    report = CommonStabilizerReport(
        o_r_order=o_r.order,
        o_q_order=o_q.order,
        pi_o_q_order=pi_q_chain.order,
        kernel_order=kernel_order,
        set_orbit_length=set_orbit,
        r_side_order=h_chain.order,
        order=kernel_order * h_chain.order if verified else None,
        derived_subgroup_order=derived.order,
        center_order=len(center),
        orbit_lengths=_orbit_lengths(h_chain),
        point_stabilizer_order=root_stab.order,
        point_stabilizer_derived_order=derived_subgroup(root_stab).order,
        conjugator_found=w is not None,
        generators_verified=verified,
        odd_element_stabilizes_alpha=odd_alpha,
        odd_element_stabilizes_beta=odd_beta,
        odd_twist_root_count=odd_roots,
        alpha=twisted,
    )
    logger.info("common stabilizer: order %d, derived %d, point stabilizer %d",
                report.order, report.derived_subgroup_order, report.point_stabilizer_order)
    return report


def _orbit_lengths(chain: Bsgs) -> List[int]:
    seen, lengths = set(), []
    for p in range(chain.degree):
        if p in seen:
            continue
        orbit = chain.orbit(p)
        seen.update(orbit)
        lengths.append(len(orbit))
    return sorted(lengths)
