"""
Root Systems
Cartan-type identification, simple roots and highest roots from enumerated norm-2 vectors
"""

import logging
from collections import Counter, deque
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..exactla import RatMat, rank
from ..lattice import Lattice
from .enumerate import roots

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

EXCEPTIONAL_COUNTS = {(6, 72): "E6", (7, 126): "E7", (8, 240): "E8"}


class UnidentifiedComponentError(ValueError):
    """A connected component of the root graph matches no Cartan type"""


def _cartan_label(rank_value: int, count: int) -> str:
    if (rank_value, count) in EXCEPTIONAL_COUNTS:
        return EXCEPTIONAL_COUNTS[(rank_value, count)]
    if count == rank_value * (rank_value + 1):
        return f"A{rank_value}"
    if rank_value >= 4 and count == 2 * rank_value * (rank_value - 1):
        return f"D{rank_value}"
    raise UnidentifiedComponentError(f"no root system of rank {rank_value} has {count} roots")


def root_components(lattice: Lattice, vectors: np.ndarray) -> List[List[int]]:
    """Connected components of the graph on vectors joined by nonzero inner products"""
    gi, _ = lattice.integer_gram
    products = vectors @ gi @ vectors.T
    adjacency = products != 0
    seen = np.zeros(len(vectors), dtype=bool)
    components = []
    for start in range(len(vectors)):
        if seen[start]:
            continue
        seen[start] = True
        queue, members = deque([start]), []
        while queue:
            i = queue.popleft()
            members.append(i)
            for j in np.flatnonzero(adjacency[i] & ~seen):
                seen[j] = True
                queue.append(int(j))
        components.append(sorted(members))
    return components


def root_system_type(lattice: Lattice, **kwargs) -> Tuple[str, ...]:
    """Sorted labels of the irreducible components, () for a rootless lattice"""
    if not lattice.is_even:
        raise ValueError(f"{lattice.name}: root system type needs an even lattice")
    found = roots(lattice, **kwargs)
    if not found.vectors:
        return ()
    vectors = found.expanded
    labels = []
    for members in root_components(lattice, vectors):
        rows = RatMat([[int(x) for x in vectors[i]] for i in members])
        labels.append(_cartan_label(rank(rows), len(members)))
    labels.sort(key=lambda s: (s[0], -int(s[1:])))
    logger.debug("%s: root system %s", lattice.name, labels)
    return tuple(labels)


def format_root_type(labels: Sequence[str]) -> str:
    """("A8","A8","A8") → "A8^3"; () → "Leech" """
    if not labels:
        return "Leech"
    counts = Counter(labels)
    parts = []
    for label in sorted(counts, key=lambda s: (s[0], -int(s[1:]))):
        parts.append(label if counts[label] == 1 else f"{label}^{counts[label]}")
    return "".join(parts)


def _functional_weights(vectors: Sequence[Vector]) -> List[int]:
    """Weights of a linear functional with no zeros on a finite nonzero vector set"""
    base = 2 * max(abs(x) for v in vectors for x in v) + 1
    return [base ** i for i in range(len(vectors[0]))]


def positive_roots(root_vectors: Sequence[Vector]) -> List[Vector]:
    """Roots on the positive side of a generic functional, both signs expected in the input"""
    weights = _functional_weights(root_vectors)
    return [v for v in root_vectors if sum(w * x for w, x in zip(weights, v)) > 0]


def simple_roots(root_vectors: Sequence[Vector]) -> List[Vector]:
    """Positive roots that are not a sum of two positive roots, in increasing functional value"""
    full = set(root_vectors) | {tuple(-x for x in v) for v in root_vectors}
    positive = positive_roots(sorted(full))
    positive_set = set(positive)
    composite = set()
    for i, a in enumerate(positive):
        for b in positive[i + 1:]:
            s = tuple(x + y for x, y in zip(a, b))
            if s in positive_set:
                composite.add(s)
    weights = _functional_weights(sorted(full))
    simple = [v for v in positive if v not in composite]
    simple.sort(key=lambda v: sum(w * x for w, x in zip(weights, v)))
    return simple


def highest_root(root_vectors: Sequence[Vector]) -> Vector:
    """Maximum of the positive functional; the highest root of an irreducible system"""
    full = sorted(set(root_vectors) | {tuple(-x for x in v) for v in root_vectors})
    weights = _functional_weights(full)
    return max(full, key=lambda v: sum(w * x for w, x in zip(weights, v)))


def dynkin_edges(lattice: Lattice, nodes: Sequence[Vector]) -> Dict[int, List[int]]:
    """Adjacency of a set of roots: i ~ j when their inner product is nonzero"""
    edges: Dict[int, List[int]] = {i: [] for i in range(len(nodes))}
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if lattice.inner(nodes[i], nodes[j]) != 0:
                edges[i].append(j)
                edges[j].append(i)
    return edges


def is_path_diagram(lattice: Lattice, nodes: Sequence[Vector]) -> bool:
    """True when the roots form a simple system of type A_n"""
    if any(lattice.inner(a, b) not in (0, -1) for i, a in enumerate(nodes) for b in nodes[i + 1:]):
        return False
    edges = dynkin_edges(lattice, nodes)
    degrees = [len(v) for v in edges.values()]
    if sum(degrees) != 2 * (len(nodes) - 1) or max(degrees, default=0) > 2:
        return False
    seen, stack = {0}, [0]
    while stack:
        for j in edges[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(nodes)


def extended_path_subsystem(lattice: Lattice, root_vectors: Sequence[Vector]) -> List[Vector]:
    """A simple system of type A_n obtained by deleting one node of the extended diagram.

    For E8 this yields A8 ⊂ E8.
    """
    simple = simple_roots(root_vectors)
    extended = simple + [tuple(-x for x in highest_root(root_vectors))]
    for drop in range(len(extended)):
        nodes = extended[:drop] + extended[drop + 1:]
        if is_path_diagram(lattice, nodes):
            return order_path(lattice, nodes)
    raise UnidentifiedComponentError("no node of the extended diagram leaves a path")


def order_path(lattice: Lattice, nodes: Sequence[Vector]) -> List[Vector]:
    """Order path-diagram nodes from one end to the other"""
    edges = dynkin_edges(lattice, nodes)
    start = next(i for i, adj in edges.items() if len(adj) <= 1)
    ordered, previous = [start], None
    while len(ordered) < len(nodes):
        current = ordered[-1]
        nxt = next(j for j in edges[current] if j != previous)
        previous = current
        ordered.append(nxt)
    return [nodes[i] for i in ordered]
