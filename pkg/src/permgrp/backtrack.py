"""
Isometry Backtracking
Short-vector backtracking for isometries and automorphism groups with extra invariants
"""

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exactla import RatMat, inverse, lll_gram, solve_integer
from ..lattice import Isometry, Lattice, SublatticeHandle
from ..shortvec import ShortVectorSet, short_vectors
from .action import PermAction
from .bsgs import Bsgs, orbit_of, schreier_sims
from .perm import Perm

logger = logging.getLogger(__name__)

Invariant = Union[SublatticeHandle, RatMat]
MODULUS = 2_147_483_647


class SearchBudgetExceeded(RuntimeError):
    """The backtracking search ran out of time; partial results are attached"""

    def __init__(self, message: str, partial: Optional[List[Isometry]] = None):
        super().__init__(message)
        self.partial = partial or []


def _invariant_rows(inv: Invariant) -> RatMat:
    return inv.rows if isinstance(inv, SublatticeHandle) else inv


def preserves(rows: RatMat, matrix: RatMat, target_rows: Optional[RatMat] = None) -> bool:
    """True when rows·matrix lies in the Z-span of target_rows (default rows)"""
    target_rows = rows if target_rows is None else target_rows
    if rows.rows == 0:
        return True
    images = rows @ matrix
    d = lcm(images.denominator(), target_rows.denominator())
    basis = (target_rows * d).to_ints()
    return all(solve_integer(basis, [int(x * d) for x in row]) is not None for row in images)


def _independent_mod_p(echelon: List[Tuple[int, List[int]]], vector: Sequence[int]) -> Optional[List[int]]:
    """Reduce vector against an echelon basis mod p; the residue if independent, else None"""
    v = [int(x) % MODULUS for x in vector]
    for pivot, row in echelon:
        if v[pivot]:
            c = v[pivot]
            v = [(a - c * b) % MODULUS for a, b in zip(v, row)]
    for pivot, a in enumerate(v):
        if a:
            inv = pow(a, -1, MODULUS)
            return [(x * inv) % MODULUS for x in v]
    return None


def choose_sequence(lattice: Lattice, vectors: ShortVectorSet) -> List[Tuple[int, ...]]:
    """Linearly independent short vectors, by increasing norm, preferring vectors
    that meet the previous choice with nonzero inner product."""
    n = lattice.rank
    by_norm = {}
    for v, nv in zip(vectors.vectors, vectors.norms):
        by_norm.setdefault(nv, []).append(v)
    echelon: List[Tuple[int, List[int]]] = []
    chosen: List[Tuple[int, ...]] = []
    for nv in sorted(by_norm):
        pool = list(by_norm[nv])
        while pool and len(chosen) < n:
            pick, residue = None, None
            fallback = None
            for i, v in enumerate(pool):
                r = _independent_mod_p(echelon, v)
                if r is None:
                    continue
                if fallback is None:
                    fallback = (i, r)
                if not chosen or lattice.inner(v, chosen[-1]) != 0:
                    pick, residue = i, r
                    break
            if pick is None:
                if fallback is None:
                    break
                pick, residue = fallback
            v = pool.pop(pick)
            pivot = next(j for j, a in enumerate(residue) if a)
            echelon = [(p, [(a - row[pivot] * b) % MODULUS for a, b in zip(row, residue)])
                       for p, row in echelon]
            echelon.append((pivot, residue))
            chosen.append(v)
        if len(chosen) == n:
            return chosen
    raise ValueError(f"{lattice.name}: short vectors do not span the lattice")


def _search_bound(lattice: Lattice) -> Fraction:
    _, reduced = lll_gram(lattice.gram)
    return max(reduced[i, i] for i in range(lattice.rank))


def _within(vectors: ShortVectorSet, bound: Fraction) -> ShortVectorSet:
    keep = [i for i, nv in enumerate(vectors.norms) if nv <= bound]
    return ShortVectorSet(vectors.lattice, bound, tuple(vectors.vectors[i] for i in keep),
                          tuple(vectors.norms[i] for i in keep))


class IsometrySearch:
    """Depth-first search for isometries source → target.

    The images of a fixed independent sequence of short source vectors are
    chosen among target vectors with matching norms and inner products;
    a complete choice determines the map, which is kept when integral and
    compatible with the invariants.
    """

    def __init__(self, source: Lattice, target: Optional[Lattice] = None,
                 invariants: Sequence[Tuple[Invariant, Invariant]] = (),
                 budget_seconds: Optional[float] = None):
        self.source = source
        self.target = target if target is not None else source
        self.invariants = [(_invariant_rows(a), _invariant_rows(b)) for a, b in invariants]
        self.budget_seconds = budget_seconds
        self.deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
        self.nodes = 0
        self.feasible = self._prepare()

    def _prepare(self) -> bool:
        src, tgt = self.source, self.target
        if src.rank != tgt.rank or src.determinant != tgt.determinant:
            return False
        n = src.rank
        cap = _search_bound(src)
        src_vectors = short_vectors(src, cap)
        self.sequence = choose_sequence(src, src_vectors)
        self.bound = max(src.norm(v) for v in self.sequence)
        src_vectors = _within(src_vectors, self.bound)
        tgt_vectors = src_vectors if tgt is src else short_vectors(tgt, self.bound)
        if src_vectors.norm_counts() != tgt_vectors.norm_counts():
            logger.debug("theta fingerprints differ up to norm %s", self.bound)
            return False
        self.points = tgt_vectors
        self.action = PermAction(tgt_vectors)
        gi, self.scale = tgt.integer_gram
        self.array = self.action.array
        self.pg = self.array @ gi
        self.point_norms = np.einsum("ij,ij->i", self.pg, self.array)

        seq_ip = [[src.inner(a, b) * self.scale for b in self.sequence] for a in self.sequence]
        if any(x.denominator != 1 for row in seq_ip for x in row):
            return False
        self.seq_ip = [[int(x) for x in row] for row in seq_ip]
        self.norm_masks = [self.point_norms == self.seq_ip[k][k] for k in range(n)]
        self.seq_inverse = inverse(RatMat(self.sequence))
        self._stack: List[np.ndarray] = []
        return True

    # -- core search ----------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded(
                f"isometry search exceeded {self.budget_seconds}s after {self.nodes} nodes")

    def candidates(self, images: Sequence[int]) -> np.ndarray:
        k = len(images)
        mask = self.norm_masks[k].copy()
        for j in range(k):
            mask &= self._stack[j] == self.seq_ip[k][j]
        return np.flatnonzero(mask)

    def _push(self, point: int) -> None:
        self._stack.append(self.pg @ self.array[point])

    def _leaf(self, images: Sequence[int]) -> Optional[Isometry]:
        rows = RatMat([self.action.point(i) for i in images])
        matrix = self.seq_inverse @ rows
        if not matrix.is_integral():
            return None
        for src_rows, tgt_rows in self.invariants:
            if not preserves(src_rows, matrix, tgt_rows):
                return None
        codomain = None if self.target is self.source else self.target
        return Isometry(self.source, matrix, codomain)

    def _dfs(self, images: List[int]) -> Optional[Isometry]:
        self._tick()
        if len(images) == len(self.sequence):
            return self._leaf(images)
        for c in self.candidates(images):
            images.append(int(c))
            self._push(int(c))
            try:
                found = self._dfs(images)
            finally:
                images.pop()
                self._stack.pop()
            if found is not None:
                return found
        return None

    def extend(self, prefix: Sequence[int]) -> Optional[Isometry]:
        """First isometry whose sequence images start with the given point indices"""
        if not self.feasible:
            return None
        self._stack = []
        for p in prefix:
            self._push(p)
        try:
            return self._dfs(list(prefix))
        finally:
            self._stack = []

    def find(self) -> Optional[Isometry]:
        found = self.extend([])
        logger.debug("isometry search %s -> %s: %s after %d nodes", self.source.name,
                     self.target.name, "found" if found else "none", self.nodes)
        return found


def find_isometry(first: Lattice, second: Lattice, budget_seconds: Optional[float] = None,
                  invariants: Sequence[Tuple[Invariant, Invariant]] = ()) -> Optional[Isometry]:
    """An isometry first → second, or None when none exists.

    Raises:
        SearchBudgetExceeded: when the budget runs out before a decision
    """
    return IsometrySearch(first, second, invariants, budget_seconds).find()


@dataclass
class AutomorphismGroup:
    """Generators of an automorphism group with its action on short vectors"""
    lattice: Lattice
    generators: List[Isometry]
    perms: List[Perm]
    orbit_lengths: List[int]
    action: PermAction
    chain: Bsgs = field(repr=False, default=None)

    @property
    def order(self) -> int:
        return prod(self.orbit_lengths)


def automorphism_group(lattice: Lattice, extra_invariants: Sequence[Invariant] = (),
                       budget_seconds: Optional[float] = None) -> AutomorphismGroup:
    """Automorphisms of lattice preserving every extra invariant.

    An invariant is a SublatticeHandle of lattice or a RatMat of rational
    rows (e.g. an overlattice basis) that must be mapped onto itself.

    The group is built level by level along the search sequence: at level k
    the orbit of the k-th sequence vector under the stabilizer of the earlier
    ones is completed by searching an extension for every candidate not yet
    reached. The order is the product of these orbit lengths and is
    cross-checked against a Schreier-Sims chain of the permutation action.

    Raises:
        SearchBudgetExceeded: with the generators found so far
    """
    search = IsometrySearch(lattice, None, [(inv, inv) for inv in extra_invariants], budget_seconds)
    if not search.feasible:
        raise ValueError(f"{lattice.name}: search setup failed")
    action = search.action
    seq_points = [action.index[tuple(v)] for v in search.sequence]
    n = len(seq_points)
    generators: List[Isometry] = []
    perms: List[Perm] = []
    orbit_lengths = [1] * n
    try:
        for k in reversed(range(n)):
            prefix = seq_points[:k]
            level = [p for p in perms if all(p[q] == q for q in prefix)]
            orbit = set(orbit_of(seq_points[k], level))
            failed = set()
            search._stack = []
            for p in prefix:
                search._push(p)
            candidates = search.candidates(prefix)
            search._stack = []
            for c in candidates:
                c = int(c)
                if c in orbit or c in failed:
                    continue
                g = search.extend(prefix + [c])
                if g is None:
                    failed.update(orbit_of(c, level))
                    continue
                perm = action.perm_from_isometry(g)
                generators.append(g)
                perms.append(perm)
                level.append(perm)
                orbit = set(orbit_of(seq_points[k], level))
            orbit_lengths[k] = len(orbit)
            logger.debug("%s: level %d orbit %d", lattice.name, k, len(orbit))
    except SearchBudgetExceeded as e:
        raise SearchBudgetExceeded(str(e), partial=generators) from e

    chain = schreier_sims(perms, action.degree)
    group = AutomorphismGroup(lattice, generators, perms, orbit_lengths, action, chain)
    if chain.order != group.order:
        raise RuntimeError(f"{lattice.name}: orbit product {group.order} disagrees with "
                           f"Schreier-Sims order {chain.order}")
    logger.info("%s: automorphism group of order %d from %d generators",
                lattice.name, group.order, len(generators))
    return group


def aut_generators(lattice: Lattice, extra_invariants: Sequence[Invariant] = (),
                   budget_seconds: Optional[float] = None) -> List[Isometry]:
    return automorphism_group(lattice, extra_invariants, budget_seconds).generators
