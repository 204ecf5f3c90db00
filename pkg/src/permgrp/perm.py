"""
Permutations
Tuples of image indices; p*q applies p first, then q
"""

from math import lcm
from typing import Iterable, List, Sequence, Tuple

Perm = Tuple[int, ...]


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """p first, then q"""
    return tuple(q[x] for x in p)


def compose_all(perms: Iterable[Sequence[int]], degree: int) -> Perm:
    result = identity_perm(degree)
    for p in perms:
        result = compose(result, p)
    return result


def invert(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def power(p: Sequence[int], k: int) -> Perm:
    if k < 0:
        return power(invert(p), -k)
    result = identity_perm(len(p))
    base = tuple(p)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(p: Sequence[int], g: Sequence[int]) -> Perm:
    """g⁻¹·p·g"""
    return compose(compose(invert(g), p), g)


def commutator(a: Sequence[int], b: Sequence[int]) -> Perm:
    """a⁻¹·b⁻¹·a·b"""
    return compose(compose(invert(a), invert(b)), compose(a, b))


def cycles(p: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(p)
    result = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle, x = [], start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x]
        result.append(cycle)
    return result


def cycle_type(p: Sequence[int]) -> Tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included"""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def order(p: Sequence[int]) -> int:
    return lcm(*(len(c) for c in cycles(p))) if len(p) else 1


def fixed_points(p: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(p) if i == x)


def first_moved_point(p: Sequence[int]) -> int:
    return next(i for i, x in enumerate(p) if i != x)


def from_cycles(cycle_list: Iterable[Sequence[int]], degree: int) -> Perm:
    image = list(range(degree))
    for c in cycle_list:
        for i, x in enumerate(c):
            image[x] = c[(i + 1) % len(c)]
    return tuple(image)
