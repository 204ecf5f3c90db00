"""
Niemeier Embeddings
Code lattices over root lattices and the seven Niemeier lattices carrying an order-3 σ with N^σ ≅ √3E8
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence

from tqdm import tqdm

from ..glue import glue_overlattice, random_valid_glue
from ..lattice import (
    Isometry, Lattice, NotInLatticeError, SublatticeHandle, annihilator, fixed_sublattice,
    isometry_from_ambient, permutation_matrix, sublattice_from_vectors,
)
from ..permgrp import Perm, cycle_type, from_cycles
from ..shortvec import format_root_type, root_count, root_system_type
from .codes import Code, Word, code_from_data, golay_element_3_8, signed_automorphism_3
from .data import ConstructionError, embedding_data, resolve_entry
from .glues import q_group, q_std, r_group, r_std
from .leech import leech_with_h
from .root_lattices import ambient_width, base_symbols, glue_vector, simple_root_vectors

logger = logging.getLogger(__name__)

NIEMEIER_TYPES = ("A8^3", "D8^3", "E8^3", "A2^12", "A1^24", "D4^6", "Leech")

Vector = List[Fraction]


def normalize_type(name: str) -> str:
    """Accept spellings like 'a8_3' or 'leech'"""
    cleaned = name.strip().replace("_", "^")
    for t in NIEMEIER_TYPES:
        if t.lower() == cleaned.lower():
            return t
    raise ValueError(f"unknown Niemeier type {name!r}; known: {', '.join(NIEMEIER_TYPES)}")


@dataclass(frozen=True, eq=False)
class NamedEmbedding:
    """N with σ of order 3, R = N^σ and Q = ann_N(R)"""
    type_name: str
    niemeier: Lattice
    sigma: Isometry
    q_handle: SublatticeHandle
    r_handle: SublatticeHandle
    centralizer_order_expected: Optional[int]
    centralizer_expression: str
    root_count_expected: int
    printed_r_matches: Optional[bool] = None
    printed_q_matches: Optional[bool] = None
    notes: Dict[str, Any] = field(default_factory=dict)


def _place(vector: Sequence[Fraction], block: int, width: int, copies: int) -> Vector:
    out = [Fraction(0)] * (width * copies)
    out[block * width:(block + 1) * width] = list(vector)
    return out


def _add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return [a + b for a, b in zip(x, y)]


def code_lattice(code: Optional[Code], base: str, copies: Optional[int] = None,
                 glue_map: Optional[Callable[[int], Vector]] = None, name: str = "") -> Lattice:
    """Overlattice of base^copies generated by the glue vectors of the code's generators.

    glue_map sends a code symbol to a dual-coset representative of the base;
    it defaults to the vectors recorded for the base.
    """
    if copies is None:
        if code is None:
            raise ValueError("copies is needed without a code")
        copies = code.length
    if code is not None and code.length != copies:
        raise ValueError(f"code of length {code.length} for {copies} copies")
    glue_map = glue_map or (lambda label: glue_vector(base, label))
    width = ambient_width(base)
    simple = simple_root_vectors(base[0], int(base[1:]))
    gens = [_place(r, b, width, copies) for b in range(copies) for r in simple]
    if code is not None:
        for word in code.generators:
            v = [Fraction(0)] * (width * copies)
            for b, label in enumerate(word):
                if label:
                    v = _add(v, _place(glue_map(label), b, width, copies))
            gens.append(v)
    return Lattice.from_generators(gens, name=name or f"N({base}^{copies})")


def block_map(block_perm: Sequence[int], width: int, signs: Optional[Sequence[int]] = None):
    """Ambient map sending block b to block block_perm[b], scaled by signs[b]"""
    perm, coord_signs = [], []
    for b, target in enumerate(block_perm):
        s = 1 if signs is None else signs[b]
        for k in range(width):
            perm.append(target * width + k)
            coord_signs.append(s)
    return permutation_matrix(perm, coord_signs)


def _glue_of(word: Sequence[int], base: str, copies: int) -> Vector:
    width = ambient_width(base)
    v = [Fraction(0)] * (width * copies)
    for b, label in enumerate(word):
        if label:
            v = _add(v, _place(glue_vector(base, label), b, width, copies))
    return v


def _trio_tetrads(code: Code, perm: Sequence[int]) -> List[Word]:
    """Words on the tetrads T ⊂ O₁ with T ∪ σT an octad, plus O₁ itself.

    O₁ is the first octad of the trio {O₁, σO₁, σ²O₁} fixed by σ; the tetrads
    come from the sextets fixed by σ and together with ∅ and O₁ form a Hamming code.
    """
    octads = sorted(tuple(i for i, x in enumerate(w) if x)
                    for w in code.words if sum(1 for x in w if x) == 8)
    trio = [o for o in octads if not set(o) & {perm[i] for i in o}]
    if not trio:
        raise ConstructionError(f"{code.name}: σ fixes no trio")
    first = trio[0]
    words = []
    for tetrad in itertools.combinations(first, 4):
        union = set(tetrad) | {perm[i] for i in tetrad}
        if code.contains([1 if i in union else 0 for i in range(code.length)]):
            words.append(tuple(1 if i in tetrad else 0 for i in range(code.length)))
    if len(words) != 14:
        raise ConstructionError(f"{code.name}: {len(words)} tetrads from fixed sextets, expected 14")
    words.append(tuple(1 if i in first else 0 for i in range(code.length)))
    return words


def _glue_words(rule: str, record: Dict[str, Any], code: Code, perm: Sequence[int],
                multipliers: Optional[Sequence[int]]) -> List[Word]:
    if rule == "fixed_subcode":
        words = sorted(code.fixed_subcode(perm, multipliers))
        expected = record.get("fixed_subcode_size")
    elif rule == "fixed_dodecads":
        words = sorted(w for w in code.fixed_subcode(perm, multipliers) if sum(1 for x in w if x) == 12)
        expected = record.get("fixed_dodecads")
    elif rule == "trio_tetrads":
        return _trio_tetrads(code, perm)
    elif rule == "generators":
        return list(code.generators)
    else:
        raise ConstructionError(f"unknown glue rule {rule!r}")
    if expected is not None and len(words) != expected:
        raise ConstructionError(f"{code.name}: {len(words)} words for {rule}, expected {expected}")
    return words


def _printed_span(lattice: Lattice, entry: Dict[str, Any], record: Dict[str, Any], code: Optional[Code],
                  perm: Sequence[int], signs: Optional[Sequence[int]]) -> SublatticeHandle:
    """The span as written down: explicit vectors, or orbit rules relative to σ.

    With `orbit: sums` the roots enter as v + σv + σ²v next to the glue vectors of the
    (σ-fixed) words picked by `glue_words`; with `orbit: differences` roots and glue
    vectors both enter as v − σv and σv − σ²v.
    """
    base, copies = record["base"], int(record["copies"])
    width = ambient_width(base)
    simple = simple_root_vectors(base[0], int(base[1:]))
    symbols = {k: [str(x) for x in v] for k, v in base_symbols(base).items()}
    vectors = []
    for pattern in entry.get("root_patterns", []):
        for r in simple:
            v = [Fraction(0)] * (width * copies)
            for b, p in enumerate(pattern):
                if p:
                    v = _add(v, _place([p * x for x in r], b, width, copies))
            vectors.append(v)
    for row in entry.get("vectors", []):
        v = []
        for item in row:
            v.extend(resolve_entry(item, symbols, width))
        vectors.append(v)

    orbit = entry.get("orbit")
    if orbit is not None:
        if orbit not in ("sums", "differences"):
            raise ConstructionError(f"unknown orbit rule {orbit!r}")
        step = block_map(perm, width, signs)
        glue = []
        if "glue_words" in entry:
            multipliers = None if signs is None else [s % code.alphabet for s in signs]
            words = _glue_words(entry["glue_words"], record, code, perm, multipliers)
            glue = [_glue_of(w, base, copies) for w in words]
        seeds = [_place(r, b, width, copies) for b in range(copies) for r in simple]
        if orbit == "differences":
            seeds.extend(glue)
        for v in seeds:
            once = list(step.vecmul(v))
            twice = list(step.vecmul(once))
            if orbit == "sums":
                vectors.append([a + b + c for a, b, c in zip(v, once, twice)])
            else:
                vectors.append([a - b for a, b in zip(v, once)])
                vectors.append([a - b for a, b in zip(once, twice)])
        if orbit == "sums":
            vectors.extend(glue)
    return sublattice_from_vectors(lattice, vectors)


def _sigma_for(type_name: str, record: Dict[str, Any], code: Optional[Code], copies: int,
               seed: int):
    spec = record["sigma"]
    signs = None
    if "block_cycles" in spec:
        perm = from_cycles(spec["block_cycles"], copies)
    elif spec.get("search") == "code_automorphism":
        perm = golay_element_3_8(seed)
    elif spec.get("search") == "signed_code_automorphism":
        perm, signs = signed_automorphism_3(code, seed)
    else:
        raise ConstructionError(f"{type_name}: no rule for σ")
    return perm, signs


def _finish(type_name: str, lattice: Lattice, sigma: Isometry, record: Dict[str, Any],
            notes: Dict[str, Any], printed: Optional[Callable[[str], SublatticeHandle]] = None
            ) -> NamedEmbedding:
    if not sigma.power(3).is_identity() or sigma.is_identity():
        raise ConstructionError(f"{type_name}: σ does not have order 3")
    r = fixed_sublattice(lattice, sigma, name="R")
    q = annihilator(lattice, r, name="Q")
    if r.rank != 8 or q.rank != 16:
        raise ConstructionError(f"{type_name}: fixed sublattice of rank {r.rank}, expected 8")
    for handle in (r, q):
        if handle.lattice.determinant != 3 ** 8:
            raise ConstructionError(f"{type_name}: det {handle.name} = {handle.lattice.determinant}")
    r_match = q_match = None
    if printed is not None and "r_span" in record:
        try:
            r_match = printed("r_span").same_as(r)
            q_match = printed("q_span").same_as(q)
        except NotInLatticeError as e:
            raise ConstructionError(f"{type_name}: a recorded span vector is not in N ({e})") from e
        if not (r_match and q_match):
            raise ConstructionError(f"{type_name}: recorded spans differ from the derived ones "
                                    f"(R {'matches' if r_match else 'differs'}, "
                                    f"Q {'matches' if q_match else 'differs'})")
    return NamedEmbedding(
        type_name=type_name,
        niemeier=lattice,
        sigma=sigma,
        q_handle=q,
        r_handle=r,
        centralizer_order_expected=record.get("centralizer_order"),
        centralizer_expression=record.get("centralizer", ""),
        root_count_expected=int(record["root_count"]),
        printed_r_matches=r_match,
        printed_q_matches=q_match,
        notes=notes,
    )


@lru_cache(maxsize=None)
def niemeier(type_name: str, seed: int = 0) -> NamedEmbedding:
    """The embedding Q ⊥ R ⊂ N for one of the seven types.

    Raises:
        ConstructionError: if any construction invariant fails
    """
    type_name = normalize_type(type_name)
    record = embedding_data()["niemeier"][type_name]
    if type_name == "Leech":
        lattice, h = leech_with_h(seed)
        return _finish(type_name, lattice, h, record, {"seed": seed})

    base, copies = record["base"], int(record["copies"])
    code = code_from_data(record["glue_code"], copies)
    lattice = code_lattice(code, base, copies, name=f"N({type_name})")
    if not (lattice.rank == 24 and lattice.is_even and lattice.is_unimodular):
        raise ConstructionError(f"N({type_name}) is not even unimodular of rank 24")
    perm, signs = _sigma_for(type_name, record, code, copies, seed)
    if code is not None and not code.preserved_by(perm, None if signs is None else
                                                  [s % code.alphabet for s in signs]):
        raise ConstructionError(f"{type_name}: σ does not preserve the glue code")
    sigma = isometry_from_ambient(lattice, block_map(perm, ambient_width(base), signs))
    notes: Dict[str, Any] = {"block_permutation": list(perm), "block_cycle_type": list(cycle_type(perm))}
    if signs is not None:
        notes["block_signs"] = list(signs)
    if code is not None:
        multipliers = None if signs is None else [s % code.alphabet for s in signs]
        notes["fixed_subcode_size"] = len(code.fixed_subcode(perm, multipliers))
    if record.get("errata"):
        notes["errata"] = record["errata"]
    return _finish(type_name, lattice, sigma, record, notes,
                   lambda key: _printed_span(lattice, record[key], record, code, perm, signs))


def all_embeddings(seed: int = 0) -> List[NamedEmbedding]:
    return [niemeier(t, seed) for t in NIEMEIER_TYPES]


def shape_3_2_permutations(n: int = 6) -> List[Perm]:
    """All permutations of n = 6 points with two 3-cycles"""
    found = set()
    for a, b, c in itertools.combinations(range(n), 3):
        rest = [x for x in range(n) if x not in (a, b, c)]
        for first in ((a, b, c), (a, c, b)):
            for second in ((rest[0], rest[1], rest[2]), (rest[0], rest[2], rest[1])):
                found.add(from_cycles([first, second], n))
    return sorted(found)


def a4_6_rejection() -> Dict[str, int]:
    """Count the 3² permutations preserving the A4⁶ glue code (none exist)"""
    record = embedding_data()["rejected"]["A4^6"]
    code = code_from_data(record["glue_code"], int(record["copies"]))
    candidates = shape_3_2_permutations(code.length)
    preserving = [p for p in candidates if code.preserved_by(p)]
    return {"code_size": code.size, "checked": len(candidates), "preserving": len(preserving)}


@dataclass(frozen=True)
class NiemeierSample:
    seed: int
    root_count: int
    root_type: str
    even_unimodular: bool

    @property
    def in_table(self) -> bool:
        return self.root_type in NIEMEIER_TYPES


def sample_niemeier(count: int, seed: int = 0, progress: bool = False) -> List[NiemeierSample]:
    """Overlattices of Q ⊥ R for random even full glues, classified by root system"""
    samples = []
    for i in tqdm(range(count), disable=not progress, desc="niemeier"):
        s = seed + i
        glue = random_valid_glue(q_group(), r_group(), s)
        lattice = glue_overlattice(q_std(), r_std(), glue, name=f"N[seed={s}]")
        labels = root_system_type(lattice)
        samples.append(NiemeierSample(
            seed=s,
            root_count=root_count(lattice),
            root_type=format_root_type(labels),
            even_unimodular=lattice.is_even and lattice.is_unimodular,
        ))
        logger.debug("sample %d: %s", s, samples[-1].root_type)
    return samples
