"""
Root Lattices
A_n, D_n, E6, E7, E8 in standard coordinates, their glue vectors, and three models of E8
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from ..exactla import RatMat
from ..lattice import Isometry, Lattice, SublatticeHandle, extend_isometry, scale
from .data import ConstructionError, embedding_data, parse_vector

logger = logging.getLogger(__name__)

Vector = List[Fraction]


def _unit(n: int, i: int, value: int = 1) -> Vector:
    return [Fraction(value if j == i else 0) for j in range(n)]


def _diff(n: int, i: int, j: int) -> Vector:
    v = _unit(n, i)
    v[j] -= 1
    return v


def simple_root_vectors(kind: str, n: int) -> List[Vector]:
    """Ambient simple roots; A_n in Z^(n+1), D_n in Z^n, E_n inside the E8 coordinates"""
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return [_diff(n + 1, i, i + 1) for i in range(n)]
    if kind == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        roots = [_diff(n, i, i + 1) for i in range(n - 1)]
        last = _unit(n, n - 2)
        last[n - 1] += 1
        return roots + [last]
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n exists for n = 6, 7, 8")
        half = Fraction(1, 2)
        first = [half, -half, -half, -half, -half, -half, -half, half]
        second = _unit(8, 0)
        second[1] += 1
        rest = [_diff(8, i + 1, i) for i in range(6)]
        return ([first, second] + rest)[:n]
    raise ValueError(f"unknown root system kind {kind!r}")


@lru_cache(maxsize=None)
def root_lattice(kind: str, n: int) -> Lattice:
    """Root lattice with the simple roots as basis, so the Gram matrix is the Cartan matrix"""
    lattice = Lattice.from_basis(simple_root_vectors(kind, n), name=f"{kind.upper()}{n}")
    if kind.upper() == "E" and n == 8 and not (lattice.is_even and lattice.is_unimodular):
        raise ConstructionError("E8 is not even unimodular")
    return lattice


def a_glue_vector(n: int, i: int) -> Vector:
    """Glue vector [i] of A_n: i/(n+1) on n+1−i coordinates, −(n+1−i)/(n+1) on the last i"""
    i %= n + 1
    m = n + 1
    return [Fraction(i, m)] * (m - i) + [Fraction(-(m - i), m)] * i


def base_symbols(base: str) -> dict:
    entry = embedding_data()["bases"].get(base, {})
    return {k: parse_vector(v) for k, v in entry.get("symbols", {}).items()}


def glue_vector(base: str, label: int) -> Vector:
    """Dual-coset representative for a code symbol of the given base (e.g. "D4", "A8")"""
    kind, n = base[0], int(base[1:])
    entry = embedding_data()["bases"].get(base)
    width = n + 1 if kind == "A" else n
    if label == 0:
        return [Fraction(0)] * width
    if entry and "alphabet" in entry:
        name = entry["alphabet"][label]
        return parse_vector(entry["symbols"][name])
    if kind == "A":
        return a_glue_vector(n, label)
    raise ConstructionError(f"no glue vectors recorded for {base}")


def ambient_width(base: str) -> int:
    kind, n = base[0], int(base[1:])
    return n + 1 if kind == "A" else (8 if kind == "E" else n)


@dataclass(frozen=True)
class E8Model:
    """E8 built from a root sublattice; sub lists its simple roots in block order"""
    lattice: Lattice
    sub: SublatticeHandle


def _embed(vector: Sequence[Fraction], block: int, width: int, copies: int) -> Vector:
    out = [Fraction(0)] * (width * copies)
    out[block * width:(block + 1) * width] = list(vector)
    return out


@lru_cache(maxsize=None)
def e8_tetracode() -> E8Model:
    """A2⁴ glued by the tetracode, in Z^12"""
    model = embedding_data()["e8_models"]["tetracode"]
    copies = int(model["copies"])
    simple = simple_root_vectors("A", 2)
    roots = [_embed(r, b, 3, copies) for b in range(copies) for r in simple]
    glue = []
    for word in model["glue_code"]:
        v = [Fraction(0)] * (3 * copies)
        for b, label in enumerate(word):
            v = [x + y for x, y in zip(v, _embed(glue_vector("A2", int(label)), b, 3, copies))]
        glue.append(v)
    lattice = Lattice.from_generators(roots + glue, name="E8[A2^4]")
    if not (lattice.rank == 8 and lattice.is_even and lattice.is_unimodular):
        raise ConstructionError("tetracode model is not even unimodular of rank 8")
    sub = SublatticeHandle(lattice, RatMat([lattice.lattice_coordinates(r) for r in roots]), "A2^4")
    return E8Model(lattice, sub)


@lru_cache(maxsize=None)
def e8_a8_plus_three() -> E8Model:
    """A8 ∪ (A8 + γ) ∪ (A8 − γ) in Z^9 with γ = ⅓(1⁶, −2³)"""
    model = embedding_data()["e8_models"]["a8_plus_three"]
    roots = simple_root_vectors("A", 8)
    symbols = base_symbols("A8")
    glue = [symbols[name] for name in model["glue"]]
    lattice = Lattice.from_generators(roots + glue, name="E8[A8]")
    if not (lattice.rank == 8 and lattice.is_even and lattice.is_unimodular):
        raise ConstructionError("A8 model is not even unimodular of rank 8")
    sub = SublatticeHandle(lattice, RatMat([lattice.lattice_coordinates(r) for r in roots]), "A8")
    return E8Model(lattice, sub)


A2_ROTATION = RatMat([[0, 1], [-1, -1]])


def a2_block_map(blocks: Sequence[RatMat]) -> RatMat:
    return RatMat.block_diagonal(*blocks)


def extend_from_a2_blocks(blocks: Sequence[RatMat]) -> Tuple[Isometry, ...]:
    """Extension of a block-diagonal map of A2⁴ to the tetracode E8 (empty tuple when refused)"""
    model = e8_tetracode()
    g = Isometry(model.sub.lattice, a2_block_map(blocks))
    ext = extend_isometry(model.lattice, model.sub, g)
    return () if ext is None else (ext,)


@lru_cache(maxsize=None)
def h_on_e8() -> Isometry:
    """Fixed-point-free isometry of order 3: the rotation of each A2 block, extended to E8"""
    found = extend_from_a2_blocks([A2_ROTATION] * 4)
    if not found:
        raise ConstructionError("the A2 rotation does not extend to E8")
    h = found[0]
    if not h.power(3).is_identity() or h.is_identity():
        raise ConstructionError("h does not have order 3")
    return h


def eee8() -> Lattice:
    """√3·E8"""
    return scale(root_lattice("E", 8), 3).renamed("EEE8")


def ee8() -> Lattice:
    """√2·E8"""
    return scale(root_lattice("E", 8), 2).renamed("EE8")
