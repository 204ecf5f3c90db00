"""
Base and Strong Generating Sets
Deterministic Schreier-Sims with explicit transversals, membership and random elements
"""

import logging
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .perm import (
    Perm, commutator, compose, conjugate, first_moved_point, fixed_points, identity_perm,
    invert, is_identity, order as perm_order, power,
)

logger = logging.getLogger(__name__)

Transversal = Dict[int, Perm]


def orbit_transversal(point: int, generators: Sequence[Perm], degree: int) -> Transversal:
    """{q: u} with u mapping point to q, for q in the orbit of point"""
    trans = {point: identity_perm(degree)}
    queue = [point]
    for p in queue:
        for g in generators:
            q = g[p]
            if q not in trans:
                trans[q] = compose(trans[p], g)
                queue.append(q)
    return trans


def orbit_of(point: int, generators: Sequence[Perm]) -> List[int]:
    seen = {point}
    queue = [point]
    for p in queue:
        for g in generators:
            q = g[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return queue


@dataclass
class Bsgs:
    """Stabilizer chain: level i holds the generators fixing base[:i] and the
    transversal of base[i] under them."""
    degree: int
    base: List[int]
    strong: List[List[Perm]]
    transversals: List[Transversal]
    generators: List[Perm]

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    @property
    def strong_generators(self) -> List[Perm]:
        seen, result = set(), []
        for level in self.strong:
            for g in level:
                if g not in seen:
                    seen.add(g)
                    result.append(g)
        return result

    def sift(self, g: Perm, start: int = 0) -> Tuple[Perm, int]:
        for level in range(start, len(self.base)):
            b = g[self.base[level]]
            trans = self.transversals[level]
            if b not in trans:
                return g, level
            g = compose(g, invert(trans[b]))
        return g, len(self.base)

    def contains(self, g: Sequence[int]) -> bool:
        if len(g) != self.degree:
            return False
        h, _ = self.sift(tuple(g))
        return is_identity(h)

    def orbit(self, point: int) -> List[int]:
        return orbit_of(point, self.generators)

    def point_stabilizer_order(self, point: int) -> int:
        return self.order // len(self.orbit(point))

    def stabilizer(self, point: int) -> "Bsgs":
        """Stabilizer chain of a point, by rebasing with the point first"""
        rebased = schreier_sims(self.strong_generators, self.degree, base=[point])
        return Bsgs(self.degree, rebased.base[1:], rebased.strong[1:], rebased.transversals[1:],
                    list(rebased.strong[1]) if len(rebased.strong) > 1 else [])

    def random_element(self, rng: np.random.Generator) -> Perm:
        """Uniform element as a product of one transversal element per level"""
        g = identity_perm(self.degree)
        for trans in reversed(self.transversals):
            keys = list(trans)
            g = compose(g, trans[keys[int(rng.integers(len(keys)))]])
        return g

    def __repr__(self) -> str:
        return f"Bsgs(degree={self.degree}, base_length={len(self.base)}, order={self.order})"


def schreier_sims(generators: Iterable[Sequence[int]], degree: int,
                  base: Optional[Sequence[int]] = None) -> Bsgs:
    """Deterministic Schreier-Sims.

    Args:
        generators: permutations on range(degree)
        degree: number of points
        base: optional prefix of the base

    Returns:
        Bsgs with complete stabilizer chain
    """
    gens = [tuple(g) for g in generators if not is_identity(g)]
    for g in gens:
        if len(g) != degree:
            raise ValueError(f"permutation of degree {len(g)} in a group of degree {degree}")
    base = list(base or [])
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(first_moved_point(g))
    strong = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))]
    transversals = [orbit_transversal(base[i], strong[i], degree) for i in range(len(base))]
    chain = Bsgs(degree, base, strong, transversals, gens)

    i = len(base) - 1
    while i >= 0:
        restart = False
        for point, u in list(chain.transversals[i].items()):
            for s in chain.strong[i]:
                image = s[point]
                schreier = compose(compose(u, s), invert(chain.transversals[i][image]))
                h, level = chain.sift(schreier, i + 1)
                if is_identity(h):
                    continue
                if level == len(chain.base):
                    chain.base.append(first_moved_point(h))
                    chain.strong.append([])
                    chain.transversals.append({})
                for l in range(i + 1, level + 1):
                    chain.strong[l].append(h)
                    chain.transversals[l] = orbit_transversal(chain.base[l], chain.strong[l], degree)
                i = level
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    logger.debug("schreier_sims: degree %d, base length %d, order %d",
                 degree, len(chain.base), chain.order)
    return chain


def extend(chain: Bsgs, g: Sequence[int]) -> Bsgs:
    """Chain of the group generated by chain's group and g"""
    if chain.contains(g):
        return chain
    return schreier_sims(chain.strong_generators + [tuple(g)], chain.degree, base=chain.base)


def normal_closure(seeds: Sequence[Perm], generators: Sequence[Perm], degree: int) -> Bsgs:
    """Smallest subgroup containing seeds and normalized by generators"""
    closure = schreier_sims(seeds, degree)
    pending = list(seeds)
    while pending:
        x = pending.pop()
        for g in generators:
            y = conjugate(x, g)
            if not closure.contains(y):
                closure = extend(closure, y)
                pending.append(y)
    return closure


def derived_subgroup(chain: Bsgs) -> Bsgs:
    gens = chain.generators
    seeds = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    seeds = [c for c in seeds if not is_identity(c)]
    return normal_closure(seeds, gens, chain.degree)


def derived_subgroup_order(chain: Bsgs) -> int:
    return derived_subgroup(chain).order


def find_element(chain: Bsgs, order_wanted: int, fixed_points_wanted: Optional[int] = None,
                 seed: int = 0, attempts: int = 2000) -> Optional[Perm]:
    """Random search for an element of the given order and fixed-point count.

    Powers of random elements are tried, so any element order divisible by
    order_wanted contributes. Returns None after the attempt budget, or at
    once when order_wanted does not divide the group order.
    """
    if chain.order % order_wanted:
        return None
    if order_wanted == 1:
        ident = identity_perm(chain.degree)
        ok = fixed_points_wanted is None or fixed_points_wanted == chain.degree
        return ident if ok else None
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        g = chain.random_element(rng)
        k = perm_order(g)
        if k % order_wanted:
            continue
        h = power(g, k // order_wanted)
        if fixed_points_wanted is None or fixed_points(h) == fixed_points_wanted:
            return h
    logger.info("find_element: no element of order %d with %s fixed points after %d attempts (seed %d)",
                order_wanted, fixed_points_wanted, attempts, seed)
    return None
