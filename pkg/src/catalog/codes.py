"""
Codes
Additive codes over Z/q and F4, the named codes used as glue, and their symmetries
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..exactla import nullspace_mod_p
from ..permgrp import Perm, cycle_type, find_element, schreier_sims
from .data import ConstructionError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

# F4 = {0, 1, ω, ω̄} encoded 0, 1, 2, 3; addition is XOR
_F4_LOG = {1: 0, 2: 1, 3: 2}
_F4_EXP = (1, 2, 3)

FIELDS = (2, 3, 4)


def f4_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _F4_EXP[(_F4_LOG[a] + _F4_LOG[b]) % 3]


@dataclass(frozen=True)
class Code:
    """Additive code of a given length over Z/alphabet, or over F4 when alphabet is 4.

    generators span the code as a group; for F4 that means both a word and
    its ω-multiple are listed.
    """
    name: str
    alphabet: int
    length: int
    generators: Tuple[Word, ...]
    meta: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.length or any(not 0 <= x < self.alphabet for x in g):
                raise ConstructionError(f"{self.name}: bad generator {g}")

    @property
    def is_klein(self) -> bool:
        return self.alphabet == 4

    def add(self, x: Sequence[int], y: Sequence[int]) -> Word:
        if self.is_klein:
            return tuple(a ^ b for a, b in zip(x, y))
        return tuple((a + b) % self.alphabet for a, b in zip(x, y))

    def negate(self, x: Sequence[int]) -> Word:
        if self.is_klein:
            return tuple(x)
        return tuple((-a) % self.alphabet for a in x)

    @cached_property
    def words(self) -> FrozenSet[Word]:
        current = {tuple([0] * self.length)}
        for g in self.generators:
            if g in current:
                continue
            layer = set(current)
            frontier = set(current)
            while frontier:
                frontier = {self.add(w, g) for w in frontier} - layer
                layer |= frontier
            current = layer
        return frozenset(current)

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def dimension(self) -> int:
        """Dimension over the field F_alphabet"""
        if self.alphabet not in FIELDS:
            raise ValueError(f"{self.name}: Z/{self.alphabet} is not a field")
        return round(math.log(self.size, self.alphabet))

    def contains(self, word: Sequence[int]) -> bool:
        return tuple(word) in self.words

    def weight_distribution(self) -> Dict[int, int]:
        return dict(sorted(Counter(sum(1 for x in w if x) for w in self.words).items()))

    @property
    def min_weight(self) -> int:
        return min(k for k in self.weight_distribution() if k)

    def is_self_dual(self) -> bool:
        """Euclidean self-duality for prime fields"""
        if self.alphabet not in (2, 3):
            raise ValueError(f"{self.name}: self-duality is checked over F2 and F3 only")
        p = self.alphabet
        if self.size != p ** (self.length / 2):
            return False
        return all(sum(a * b for a, b in zip(x, y)) % p == 0
                   for x in self.generators for y in self.generators)

    def transform(self, word: Sequence[int], perm: Sequence[int],
                  multipliers: Optional[Sequence[int]] = None) -> Word:
        """Coordinate i moves to perm[i], scaled by multipliers[i]"""
        out = [0] * self.length
        for i, x in enumerate(word):
            m = 1 if multipliers is None else multipliers[i]
            out[perm[i]] = f4_mul(m, x) if self.is_klein else (m * x) % self.alphabet
        return tuple(out)

    def preserved_by(self, perm: Sequence[int], multipliers: Optional[Sequence[int]] = None) -> bool:
        return all(self.contains(self.transform(g, perm, multipliers)) for g in self.generators)

    def fixed_subcode(self, perm: Sequence[int],
                      multipliers: Optional[Sequence[int]] = None) -> FrozenSet[Word]:
        return frozenset(w for w in self.words if self.transform(w, perm, multipliers) == w)

    def __repr__(self) -> str:
        return f"Code({self.name!r}, q={self.alphabet}, n={self.length}, size={self.size})"


def _check(code: Code, size: int, min_weight: Optional[int] = None) -> Code:
    if code.size != size:
        raise ConstructionError(f"{code.name}: {code.size} words, expected {size}")
    if min_weight is not None and code.min_weight != min_weight:
        raise ConstructionError(f"{code.name}: minimum weight {code.min_weight}, expected {min_weight}")
    return code


# -- binary ---------------------------------------------------------------

GOLAY_LENGTH = 24
INFINITY = 23
_QR23 = frozenset((x * x) % 23 for x in range(1, 23))


@lru_cache(maxsize=None)
def golay24() -> Code:
    """Extended quadratic-residue code of length 24; position 23 is ∞"""
    rows = []
    for shift in range(23):
        support = {(r + shift) % 23 for r in _QR23}
        word = [1 if i in support else 0 for i in range(23)]
        rows.append(tuple(word + [sum(word) % 2]))
    code = Code("golay24", 2, GOLAY_LENGTH, tuple(rows))
    _check(code, 4096, 8)
    if set(code.weight_distribution()) != {0, 8, 12, 16, 24}:
        raise ConstructionError("golay24: code is not doubly even")
    return code


def _projective_map(f) -> Perm:
    images = []
    for x in range(24):
        images.append(f(None if x == INFINITY else x))
    return tuple(INFINITY if y is None else y for y in images)


def _translate(x):
    return None if x is None else (x + 1) % 23


def _double(x):
    return None if x is None else (2 * x) % 23


def _negative_inverse(x):
    if x is None:
        return 0
    if x == 0:
        return None
    return (-pow(x, -1, 23)) % 23


@lru_cache(maxsize=None)
def golay_automorphisms() -> Tuple[Perm, ...]:
    """Generators x+1, 2x, −1/x of PSL(2,23) on the projective line over F23"""
    gens = tuple(_projective_map(f) for f in (_translate, _double, _negative_inverse))
    code = golay24()
    for g in gens:
        if not code.preserved_by(g):
            raise ConstructionError("golay24: projective generator does not preserve the code")
    return gens


def golay_element_3_8(seed: int = 0, attempts: int = 2000) -> Perm:
    """A fixed-point-free element of order 3 (cycle shape 3^8) preserving golay24.

    Raises:
        ConstructionError: when the seeded search fails
    """
    chain = schreier_sims(golay_automorphisms(), GOLAY_LENGTH)
    if chain.order != 6072:
        raise ConstructionError(f"golay24: automorphism subgroup of order {chain.order}, expected 6072")
    h = find_element(chain, 3, fixed_points_wanted=0, seed=seed, attempts=attempts)
    if h is None:
        raise ConstructionError(f"no element of shape 3^8 found (seed {seed})")
    if cycle_type(h) != (3,) * 8:
        raise ConstructionError(f"element of shape {cycle_type(h)} found, expected 3^8")
    return h


@lru_cache(maxsize=None)
def hamming8() -> Code:
    rows = ((1, 1, 1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 1, 1, 0, 0),
            (0, 0, 0, 0, 1, 1, 1, 1), (0, 1, 0, 1, 0, 1, 0, 1))
    return _check(Code("hamming8", 2, 8, rows), 16, 4)


def tripled(code: Code) -> Code:
    """Words (c, c, c)"""
    rows = tuple(g * 3 for g in code.generators)
    return Code(f"3x{code.name}", code.alphabet, 3 * code.length, rows)


# -- ternary --------------------------------------------------------------

_TG_A = ((0, 1, 1, 1, 1, 1), (1, 0, 1, 2, 2, 1), (1, 1, 0, 1, 2, 2),
         (1, 2, 1, 0, 1, 2), (1, 2, 2, 1, 0, 1), (1, 1, 2, 2, 1, 0))


@lru_cache(maxsize=None)
def ternary_golay() -> Code:
    """[12, 6, 6] self-dual code with generator matrix [I | A]"""
    rows = tuple(tuple(1 if i == j else 0 for j in range(6)) + a for i, a in enumerate(_TG_A))
    code = _check(Code("ternary_golay", 3, 12, rows), 729, 6)
    if not code.is_self_dual():
        raise ConstructionError("ternary_golay: code is not self-dual")
    return code


@lru_cache(maxsize=None)
def tetracode() -> Code:
    return _check(Code("tetracode", 3, 4, ((1, 1, 1, 0), (0, 1, 2, 1))), 9, 3)


def _random_triple_cycles(rng: np.random.Generator, n: int) -> List[List[int]]:
    points = [int(x) for x in rng.permutation(n)]
    return [points[i:i + 3] for i in range(0, n, 3)]


def signed_automorphism_3(code: Code, seed: int = 0,
                          attempts: int = 5000) -> Tuple[Perm, Tuple[int, ...]]:
    """A monomial map of order 3 whose permutation has only 3-cycles.

    Random 3^k permutations are tried; for each one the multipliers d with
    G·(transformed generators)ᵀ = 0 form a linear system over F3 (the code
    is self-dual), and a solution with nonzero entries whose product over
    every cycle is 1 gives a map of order 3.

    Raises:
        ConstructionError: after the attempt budget
    """
    if code.alphabet != 3 or code.length % 3:
        raise ValueError("signed search needs a ternary code of length divisible by 3")
    n = code.length
    rng = np.random.default_rng(seed)
    gens = code.generators
    for attempt in range(attempts):
        cycles = _random_triple_cycles(rng, n)
        perm = [0] * n
        for a, b, c in cycles:
            perm[a], perm[b], perm[c] = b, c, a
        # equation for (check row k, generator g): Σ_i gens[k][perm[i]]·g[i]·d_i = 0
        system = [[(gens[k][perm[i]] * g[i]) % 3 for i in range(n)] for k in range(len(gens)) for g in gens]
        basis = nullspace_mod_p(system, 3)
        for coeffs in itertools.product(range(3), repeat=len(basis)):
            if not any(coeffs):
                continue
            d = [sum(c * row[i] for c, row in zip(coeffs, basis)) % 3 for i in range(n)]
            if 0 in d:
                continue
            if all((d[a] * d[b] * d[c]) % 3 == 1 for a, b, c in cycles):
                if code.preserved_by(perm, d):
                    logger.debug("%s: signed 3-element after %d attempts", code.name, attempt + 1)
                    return tuple(perm), tuple(1 if x == 1 else -1 for x in d)
    raise ConstructionError(f"{code.name}: no signed automorphism of shape 3^{n // 3} (seed {seed})")


# -- quaternary -----------------------------------------------------------


def _hexacode_word(a: int, b: int, c: int) -> Word:
    def f(x: int) -> int:
        return f4_mul(a, f4_mul(x, x)) ^ f4_mul(b, x) ^ c

    return (a, b, c, f(1), f(2), f(3))


@lru_cache(maxsize=None)
def hexacode() -> Code:
    """{(a, b, c, f(1), f(ω), f(ω̄)) : f(x) = ax² + bx + c}"""
    rows = []
    for i in range(3):
        for s in (1, 2):
            abc = [s if j == i else 0 for j in range(3)]
            rows.append(_hexacode_word(*abc))
    return _check(Code("hexacode", 4, 6, tuple(rows)), 64, 4)


def code_from_data(spec: Dict, length: int) -> Optional[Code]:
    """Glue code described in the catalog data: a named code or explicit generators"""
    if spec is None:
        return None
    if "name" in spec:
        return code(spec["name"])
    rows = tuple(tuple(int(x) for x in row) for row in spec["generators"])
    return Code(f"glue{spec['alphabet']}^{length}", int(spec["alphabet"]), length, rows)


_NAMED = {
    "golay24": golay24,
    "hamming8": hamming8,
    "ternary_golay": ternary_golay,
    "tetracode": tetracode,
    "hexacode": hexacode,
}


def code(name: str) -> Code:
    """Named code: golay24, hamming8, ternary_golay, tetracode, hexacode, tripled_hamming8"""
    if name == "tripled_hamming8":
        return tripled(hamming8())
    try:
        return _NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown code {name!r}; known: {sorted(_NAMED) + ['tripled_hamming8']}")
