"""
Named Builds
Lattices the CLI can emit by name
"""

from typing import Callable, Dict

from ..lattice import Lattice
from .glues import l_beta, m_phi, q_std, r_std
from .leech import leech
from .niemeier import NIEMEIER_TYPES, niemeier
from .root_lattices import ee8, eee8, root_lattice

_SIMPLE: Dict[str, Callable[[int], Lattice]] = {
    "a2": lambda seed: root_lattice("A", 2),
    "e8": lambda seed: root_lattice("E", 8),
    "ee8": lambda seed: ee8(),
    "eee8": lambda seed: eee8(),
    "q_a2e8": lambda seed: q_std(),
    "r_eee8": lambda seed: r_std(),
    "leech": lambda seed: leech(),
    "m_phi": lambda seed: m_phi(),
    "l_beta": lambda seed: l_beta(seed),
}


def build_names() -> list:
    return sorted(_SIMPLE) + [f"niemeier:{t}" for t in NIEMEIER_TYPES]


def build_lattice(name: str, seed: int = 0) -> Lattice:
    """Lattice for a build name such as 'e8' or 'niemeier:A8^3'.

    Raises:
        ValueError: for an unknown name
    """
    key = name.strip().lower()
    if key.startswith("niemeier:"):
        emb = niemeier(name.split(":", 1)[1], seed)
        return emb.niemeier
    if key not in _SIMPLE:
        raise ValueError(f"unknown build {name!r}; known: {', '.join(build_names())}")
    return _SIMPLE[key](seed)
