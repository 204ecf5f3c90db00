"""
Glue Maps
Triples (A, B, ψ) between discriminant groups, their overlattices, and twisting
"""

import json
import logging
from functools import cached_property
from math import prod
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..exactla import RatMat, inverse, rational_hnf_basis, solve_integer
from ..exactla.normal_forms import hnf_rows
from ..lattice import (
    Embedding, Lattice, SublatticeHandle, direct_sum, is_primitive,
)
from .discriminant import (
    DiscriminantAutomorphism, DiscriminantGroup, Element, GlueError, mod1, mod2,
)

logger = logging.getLogger(__name__)


def _subgroup_order(gens: Sequence[Sequence[int]], moduli: Sequence[int]) -> Tuple[int, List[List[int]]]:
    """Order of the subgroup generated by gens in ⊕ Z/moduli, and the HNF of its preimage"""
    k = len(moduli)
    relations = [[m if i == j else 0 for j in range(k)] for i, m in enumerate(moduli)]
    rows = [list(g) for g in gens] + relations
    if not rows or k == 0:
        return 1, []
    h, _, pivots = hnf_rows(rows, k)
    h = h[:len(pivots)]
    index = prod(h[r][c] for r, c in enumerate(pivots))
    return prod(moduli) // index, h


def _reduced_rows(h: Sequence[Sequence[int]], moduli: Sequence[int]) -> List[Tuple[int, Tuple[int, ...]]]:
    """(row index, row mod moduli) for the HNF rows that survive reduction"""
    out = []
    for i, row in enumerate(h):
        reduced = tuple(x % m for x, m in zip(row, moduli))
        if any(reduced):
            out.append((i, reduced))
    return out


def _hnf_coordinates(h: Sequence[Sequence[int]], target: Sequence[int]) -> List[int]:
    """Coordinates of target in the basis given by the rows of an HNF"""
    residual = list(target)
    coords = []
    for row in h:
        c = next(i for i, x in enumerate(row) if x)
        if residual[c] % row[c]:
            raise GlueError(f"{tuple(target)} is not in the subgroup")
        y = residual[c] // row[c]
        coords.append(y)
        if y:
            residual = [s - y * t for s, t in zip(residual, row)]
    if any(residual):
        raise GlueError(f"{tuple(target)} is not in the subgroup")
    return coords


class GlueMap:
    """ψ: A → B with A ≤ 𝒟(source) and B ≤ 𝒟(target), stored as its graph.

    The generators are normalized from the Hermite form of the graph's
    preimage, so b_gens[i] = ψ(a_gens[i]) and equal maps compare equal.
    """

    def __init__(self, source: DiscriminantGroup, target: DiscriminantGroup,
                 a_gens: Sequence[Sequence[int]], b_gens: Sequence[Sequence[int]]):
        if len(a_gens) != len(b_gens):
            raise GlueError("every generator of A needs an image in B")
        self.source = source
        self.target = target
        k1 = source.rank
        moduli = list(source.invariant_factors) + list(target.invariant_factors)
        graph = [list(source.normalize(a)) + list(target.normalize(b)) for a, b in zip(a_gens, b_gens)]
        graph_order, h = _subgroup_order(graph, moduli)
        order_a, self._a_hnf = _subgroup_order([g[:k1] for g in graph], source.invariant_factors)
        order_b, self._b_hnf = _subgroup_order([g[k1:] for g in graph], target.invariant_factors)
        if not graph_order == order_a == order_b:
            raise GlueError(f"generator images do not define an isomorphism "
                            f"(|graph|={graph_order}, |A|={order_a}, |B|={order_b})")
        self._graph_hnf = tuple(tuple(r) for r in h)
        reduced = [[x % m for x, m in zip(row, moduli)] for row in h]
        reduced = [row for row in reduced if any(row)]
        self.a_gens: Tuple[Element, ...] = tuple(tuple(r[:k1]) for r in reduced)
        self.b_gens: Tuple[Element, ...] = tuple(tuple(r[k1:]) for r in reduced)
        self.order = graph_order

    @classmethod
    def trivial(cls, source: DiscriminantGroup, target: DiscriminantGroup) -> "GlueMap":
        return cls(source, target, [], [])

    @property
    def a_basis(self) -> Tuple[Element, ...]:
        """Generators of A read off its Hermite form; canonical for the subgroup"""
        return tuple(r for _, r in _reduced_rows(self._a_hnf, self.source.invariant_factors))

    @property
    def b_basis(self) -> Tuple[Element, ...]:
        return tuple(r for _, r in _reduced_rows(self._b_hnf, self.target.invariant_factors))

    @cached_property
    def psi(self) -> List[List[int]]:
        """Matrix of ψ from a_basis to b_basis: ψ(a_basis[i]) = Σ_j psi[i][j]·b_basis[j].

        Rows come from the coordinates of the reduced image in the Hermite basis
        of B's preimage, so equal maps give equal matrices.
        """
        kept = [i for i, _ in _reduced_rows(self._b_hnf, self.target.invariant_factors)]
        rows = []
        for a in self.a_basis:
            coords = _hnf_coordinates(self._b_hnf, self.apply(a))
            rows.append([coords[i] for i in kept])
        return rows

    @property
    def graph(self) -> List[Tuple[Element, Element]]:
        return list(zip(self.a_gens, self.b_gens))

    def is_full(self) -> bool:
        return self.order == self.source.order == self.target.order

    def inverse(self) -> "GlueMap":
        """ψ⁻¹: B → A"""
        return GlueMap(self.target, self.source, self.b_gens, self.a_gens)

    def apply(self, a: Sequence[int]) -> Element:
        """ψ(a) for a in A"""
        moduli = self.source.invariant_factors
        rows = [list(x) for x in self.a_gens] + [
            [m if i == j else 0 for j in range(len(moduli))] for i, m in enumerate(moduli)]
        coeffs = solve_integer(rows, list(self.source.normalize(a)))
        if coeffs is None:
            raise GlueError(f"{tuple(a)} is not in the domain of the glue map")
        total = [0] * self.target.rank
        for c, b in zip(coeffs, self.b_gens):
            if c:
                total = [t + c * x for t, x in zip(total, b)]
        return self.target.normalize(total)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GlueMap):
            return NotImplemented
        return (self.source.invariant_factors == other.source.invariant_factors
                and self.target.invariant_factors == other.target.invariant_factors
                and self._graph_hnf == other._graph_hnf)

    def __hash__(self) -> int:
        return hash(self._graph_hnf)

    def __repr__(self) -> str:
        return (f"GlueMap({self.source.lattice.name!r} -> {self.target.lattice.name!r}, "
                f"order={self.order})")

    # -- serialization --------------------------------------------------

    def to_dict(self, source_file: str = "", target_file: str = "") -> Dict[str, Any]:
        return {
            "source_lattice": source_file or self.source.lattice.name,
            "target_lattice": target_file or self.target.lattice.name,
            "source_invariant_factors": list(self.source.invariant_factors),
            "target_invariant_factors": list(self.target.invariant_factors),
            "a_gens": [list(a) for a in self.a_basis],
            "b_gens": [list(b) for b in self.b_basis],
            "psi": self.psi,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: DiscriminantGroup,
                  target: DiscriminantGroup) -> "GlueMap":
        """Rebuild a glue map; ψ(a_i) = Σ_j psi[i][j]·b_j"""
        try:
            a_gens = [[int(x) for x in row] for row in data["a_gens"]]
            b_gens = [[int(x) for x in row] for row in data["b_gens"]]
            psi = data.get("psi") or [[1 if i == j else 0 for j in range(len(b_gens))]
                                       for i in range(len(a_gens))]
        except (KeyError, TypeError, ValueError) as e:
            raise GlueError(f"malformed glue map: {e}") from e
        if list(data.get("source_invariant_factors", source.invariant_factors)) != source.invariant_factors:
            raise GlueError("glue map source does not match the discriminant group")
        if list(data.get("target_invariant_factors", target.invariant_factors)) != target.invariant_factors:
            raise GlueError("glue map target does not match the discriminant group")
        images = []
        for row in psi:
            total = [0] * target.rank
            for c, b in zip(row, b_gens):
                total = [t + int(c) * x for t, x in zip(total, b)]
            images.append(total)
        return cls(source, target, a_gens, images)


def save_glue(glue: GlueMap, path: Union[str, Path], source_file: str = "",
              target_file: str = "") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(glue.to_dict(source_file, target_file), f, indent=2)
    return path


def load_glue(path: Union[str, Path], source: DiscriminantGroup, target: DiscriminantGroup) -> GlueMap:
    with open(path, "r", encoding="utf-8") as f:
        return GlueMap.from_dict(json.load(f), source, target)


def is_totally_singular(glue: GlueMap) -> bool:
    """b₁(a, a') + b₂(ψa, ψa') ≡ 0 mod 1 on all generator pairs"""
    src, tgt = glue.source, glue.target
    pairs = glue.graph
    for i, (a, b) in enumerate(pairs):
        for a2, b2 in pairs[i:]:
            if mod1(src.bilinear(a, a2) + tgt.bilinear(b, b2)) != 0:
                return False
    return True


def is_even_glue(glue: GlueMap) -> bool:
    """Totally singular and q₁(a) + q₂(ψa) ≡ 0 mod 2 on generators"""
    if not is_totally_singular(glue):
        return False
    return all(mod2(glue.source.quadratic(a) + glue.target.quadratic(b)) == 0 for a, b in glue.graph)


def twist(glue: GlueMap, gq: Optional[DiscriminantAutomorphism] = None,
          gr: Optional[DiscriminantAutomorphism] = None) -> GlueMap:
    """a ↦ gr(ψ(gq⁻¹ a)), i.e. the graph {(gq·a, gr·ψa)}"""
    a_gens = [gq.apply(a) if gq is not None else a for a in glue.a_gens]
    b_gens = [gr.apply(b) if gr is not None else b for b in glue.b_gens]
    return GlueMap(glue.source, glue.target, a_gens, b_gens)


def _check_group(group: DiscriminantGroup, lattice: Lattice) -> None:
    if group.lattice is not lattice and group.lattice.gram != lattice.gram:
        raise GlueError(f"glue group belongs to {group.lattice.name}, not {lattice.name}")


def overlattice_basis(glue: GlueMap) -> RatMat:
    """Basis of the overlattice in coordinates of source ⊥ target"""
    n = glue.source.lattice.rank + glue.target.lattice.rank
    rows = [list(glue.source.lift(a)) + list(glue.target.lift(b)) for a, b in glue.graph]
    return rational_hnf_basis(RatMat.vstack(RatMat.identity(n), RatMat(rows, cols=n)))


def glue_overlattice_with_handles(first: Lattice, second: Lattice, glue: GlueMap,
                                  name: str = "") -> Tuple[Lattice, SublatticeHandle, SublatticeHandle]:
    """Overlattice of first ⊥ second with the handles of both summands inside it"""
    _check_group(glue.source, first)
    _check_group(glue.target, second)
    basis = overlattice_basis(glue)
    block = RatMat.block_diagonal(first.gram, second.gram)
    gram = basis @ block @ basis.T
    emb = None
    ds = direct_sum(first, second)
    if ds.embedding is not None:
        emb = Embedding(basis @ ds.embedding.basis, ds.embedding.ambient_scale)
    lattice = Lattice(gram, emb, name=name or f"({first.name}+{second.name})[glue]", check=False)
    coords = inverse(basis)
    n1 = first.rank
    h1 = SublatticeHandle(lattice, coords.take_rows(range(n1)), first.name)
    h2 = SublatticeHandle(lattice, coords.take_rows(range(n1, n1 + second.rank)), second.name)
    logger.debug("glued %s: index %d, det %s", lattice.name, glue.order, lattice.determinant)
    return lattice, h1, h2


def glue_overlattice(first: Lattice, second: Lattice, glue: GlueMap, name: str = "") -> Lattice:
    return glue_overlattice_with_handles(first, second, glue, name)[0]


def glue_from_basis(source: DiscriminantGroup, target: DiscriminantGroup, basis: RatMat) -> GlueMap:
    """Glue of an overlattice given by rational basis rows over source ⊥ target"""
    n1 = source.lattice.rank
    a_gens, b_gens = [], []
    for row in basis:
        a_gens.append(source.coords(row[:n1]))
        b_gens.append(target.coords(row[n1:]))
    return GlueMap(source, target, a_gens, b_gens)


def glue_of_overlattice(lattice: Lattice, first: SublatticeHandle, second: SublatticeHandle,
                        source: Optional[DiscriminantGroup] = None,
                        target: Optional[DiscriminantGroup] = None) -> GlueMap:
    """Read ψ off an overlattice of two orthogonal primitive sublattices.

    The groups default to those of first.lattice and second.lattice; when
    given they must belong to lattices with the same Gram matrices.

    Raises:
        GlueError: for non-primitive, non-orthogonal or non-spanning inputs
    """
    if first.rank + second.rank != lattice.rank:
        raise GlueError("sublattices must have complementary ranks")
    if not (is_primitive(first) and is_primitive(second)):
        raise GlueError("glue_of_overlattice needs primitive sublattices")
    if not (first.rows @ lattice.gram @ second.rows.T).is_zero():
        raise GlueError("sublattices are not orthogonal")
    source = source or DiscriminantGroup(first.lattice)
    target = target or DiscriminantGroup(second.lattice)
    _check_group(source, first.lattice)
    _check_group(target, second.lattice)
    coords = inverse(RatMat.vstack(first.rows, second.rows))
    return glue_from_basis(source, target, coords)
