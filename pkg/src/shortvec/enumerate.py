"""
Short Vector Enumeration
Fincke-Pohst enumeration over LLL-reduced rational Cholesky data with exact verification
"""

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..exactla import DEFAULT_DELTA, Rational, lll_gram, to_fraction
from ..lattice import Lattice, LatticeError

logger = logging.getLogger(__name__)

DEFAULT_MARGIN = 1e-9
INT64_SAFE = 2 ** 62


class EnumerationBudgetError(RuntimeError):
    """The enumeration would exceed its memory budget"""


@dataclass(frozen=True, eq=False)
class ShortVectorSet:
    """Sign-normalized representatives of all nonzero vectors with norm ≤ bound.

    Each stored row stands for the pair ±v; counts are doubled accordingly.
    """
    lattice: Lattice
    bound: Fraction
    vectors: Tuple[Tuple[int, ...], ...]
    norms: Tuple[Fraction, ...]

    @property
    def count(self) -> int:
        return 2 * len(self.vectors)

    def __len__(self) -> int:
        return self.count

    def norm_counts(self) -> Dict[Fraction, int]:
        """Number of vectors (both signs) per norm"""
        counts = Counter(self.norms)
        return {k: 2 * v for k, v in sorted(counts.items())}

    def restricted(self, norm: Rational) -> "ShortVectorSet":
        norm = to_fraction(norm)
        keep = [i for i, nv in enumerate(self.norms) if nv == norm]
        return ShortVectorSet(self.lattice, norm,
                              tuple(self.vectors[i] for i in keep),
                              tuple(self.norms[i] for i in keep))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64).reshape(len(self.vectors), self.lattice.rank)

    @cached_property
    def expanded(self) -> np.ndarray:
        """All vectors with point 2i = v_i and point 2i+1 = −v_i"""
        base = self.array
        out = np.empty((2 * base.shape[0], base.shape[1]), dtype=np.int64)
        out[0::2] = base
        out[1::2] = -base
        return out

    @cached_property
    def expanded_norms(self) -> Tuple[Fraction, ...]:
        return tuple(nv for nv in self.norms for _ in (0, 1))


def _cholesky_form(gram) -> List[List[float]]:
    """Fincke-Pohst quadratic form: x·G·xᵀ = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)²"""
    n = gram.rows
    q = [[Fraction(x) for x in row] for row in gram.entries]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return [[float(q[i][j]) if j >= i else 0.0 for j in range(n)] for i in range(n)]


def _enumerate_branch(q: List[List[float]], bound: float, outer: Optional[int]) -> List[Tuple[int, ...]]:
    """Depth-first enumeration of half the vectors of norm ≤ bound.

    Only vectors whose last nonzero coordinate is positive are produced.
    When outer is given, the last coordinate is pinned to that value.
    """
    n = len(q)
    y = [0] * n
    found: List[Tuple[int, ...]] = []
    eps = 1e-12 * max(bound, 1.0)

    def walk(i: int, remaining: float, higher_zero: bool) -> None:
        row = q[i]
        center = 0.0
        for j in range(i + 1, n):
            if y[j]:
                center -= row[j] * y[j]
        radius = math.sqrt(max(remaining, 0.0) / row[i])
        lo = math.ceil(center - radius - 1e-9)
        hi = math.floor(center + radius + 1e-9)
        if higher_zero and lo < 0:
            lo = 0
        for v in range(lo, hi + 1):
            t = v - center
            rest = remaining - row[i] * t * t
            if rest < -eps:
                continue
            y[i] = v
            zero = higher_zero and v == 0
            if i == 0:
                if not zero:
                    found.append(tuple(y))
            else:
                walk(i - 1, rest, zero)
        y[i] = 0

    if outer is None:
        walk(n - 1, bound, True)
        return found
    top = q[n - 1][n - 1]
    rest = bound - top * outer * outer
    if rest < -eps:
        return found
    y[n - 1] = outer
    if n == 1:
        if outer != 0:
            found.append(tuple(y))
        return found
    walk(n - 2, rest, outer == 0)
    return found


def short_vectors(lattice: Lattice, bound: Rational, workers: int = 1, progress: bool = False,
                  margin: float = DEFAULT_MARGIN, delta: Rational = DEFAULT_DELTA,
                  max_vectors: int = 20_000_000) -> ShortVectorSet:
    """All nonzero vectors of norm ≤ bound, one sign-normalized representative per ±pair.

    Floats only prune the search tree (with a safety margin); every reported
    vector is checked with exact integer arithmetic.

    Args:
        lattice: positive definite lattice
        bound: rational norm bound
        workers: process count; work is split on the outermost coordinate
        progress: show a tqdm bar over the outermost coordinate
        margin: relative slack applied to the float bound
        delta: LLL parameter for the preprocessing step
        max_vectors: resource budget on reported candidates

    Returns:
        ShortVectorSet in lexicographic order of the representatives
    """
    bound = to_fraction(bound)
    n = lattice.rank
    if n == 0 or bound <= 0:
        return ShortVectorSet(lattice, bound, (), ())

    transform, reduced = lll_gram(lattice.gram, delta)
    q = _cholesky_form(reduced)
    float_bound = float(bound) * (1.0 + margin) + margin
    top_radius = math.sqrt(float_bound / q[n - 1][n - 1])
    outers = list(range(0, math.floor(top_radius + 1e-9) + 1))

    candidates: List[Tuple[int, ...]] = []

    def collect(part: List[Tuple[int, ...]]) -> None:
        candidates.extend(part)
        if len(candidates) > max_vectors:
            raise EnumerationBudgetError(
                f"more than {max_vectors} candidates below norm {bound} in {lattice.name}")

    if workers and workers > 1 and len(outers) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_enumerate_branch, [q] * len(outers), [float_bound] * len(outers), outers)
            for part in tqdm(parts, total=len(outers), disable=not progress, desc="shortvec"):
                collect(part)
    else:
        for outer in tqdm(outers, disable=not progress, desc="shortvec"):
            collect(_enumerate_branch(q, float_bound, outer))

    if not candidates:
        return ShortVectorSet(lattice, bound, (), ())

    u = np.array(transform.to_ints(), dtype=np.int64)
    ys = np.array(candidates, dtype=np.int64)
    xs = ys @ u
    gi, d = lattice.integer_gram
    if int(np.abs(xs).max()) ** 2 * int(np.abs(gi).max()) * n * n >= INT64_SAFE:
        xs_obj = xs.astype(object)
        norms_int = np.einsum("ij,ij->i", xs_obj @ gi.astype(object), xs_obj)
    else:
        norms_int = np.einsum("ij,ij->i", xs @ gi, xs)

    limit = bound * d
    keep = [i for i, v in enumerate(norms_int) if 0 < int(v) and int(v) * limit.denominator <= limit.numerator]
    xs = xs[keep]
    norms_int = [int(norms_int[i]) for i in keep]

    first = np.argmax(xs != 0, axis=1)
    signs = np.sign(xs[np.arange(xs.shape[0]), first])
    xs = xs * signs[:, None]
    order = np.lexsort(xs.T[::-1])
    vectors = tuple(tuple(int(c) for c in xs[i]) for i in order)
    norms = tuple(Fraction(norms_int[i], d) for i in order)
    logger.debug("%s: %d vectors of norm <= %s from %d candidates",
                 lattice.name, 2 * len(vectors), bound, len(candidates))
    return ShortVectorSet(lattice, bound, vectors, norms)


def roots(lattice: Lattice, **kwargs) -> ShortVectorSet:
    """Norm-2 vectors"""
    return short_vectors(lattice, 2, **kwargs).restricted(2)


def root_count(lattice: Lattice, **kwargs) -> int:
    return roots(lattice, **kwargs).count


def minimum(lattice: Lattice) -> Fraction:
    """Minimal nonzero norm, searched up to the smallest reduced diagonal entry

    Raises:
        LatticeError: for the zero lattice, which has no nonzero vectors
    """
    if lattice.rank == 0:
        raise LatticeError(f"{lattice.name or 'lattice'} has rank 0 and no minimum")
    _, reduced = lll_gram(lattice.gram)
    cap = min(reduced[i, i] for i in range(lattice.rank))
    found = short_vectors(lattice, cap)
    return min(found.norms)


def theta_coefficients(lattice: Lattice, max_norm: int, **kwargs) -> List[int]:
    """counts[k] = #{v : norm(v) = k·step} for k·step ≤ max_norm.

    step is 2 for even lattices and 1 for odd integral ones; counts[0] = 1.
    """
    if not lattice.is_integral:
        raise ValueError("theta coefficients need an integral lattice")
    step = 2 if lattice.is_even else 1
    counts = [0] * (max_norm // step + 1)
    counts[0] = 1
    if max_norm >= step:
        found = short_vectors(lattice, max_norm, **kwargs)
        for norm_value, c in found.norm_counts().items():
            counts[int(norm_value) // step] += c
    return counts
