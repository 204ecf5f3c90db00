"""
Lattice Module
Lattices, sublattices, isometries and their structural operations
"""

from .lattice import (
    Embedding, Lattice, LatticeError, NotInLatticeError,
    dual, direct_sum, scale, tensor, is_even, is_integral, is_unimodular, determinant,
)
from .sublattice import (
    INFINITE_INDEX, SublatticeHandle, annihilator, index, is_primitive, saturation,
    sublattice, sublattice_from_vectors, sum_of,
)
from .isometry import (
    Isometry, NotAnIsometryError, char_poly, cofixed, extend_isometry, fixed_sublattice,
    has_fixed_points, isometric, isometry_from_ambient, permutation_matrix, reflection,
    restrict_isometry, trace,
)
from .io import lattice_from_dict, lattice_to_dict, load_lattice, save_lattice

__all__ = [
    'Embedding', 'Lattice', 'LatticeError', 'NotInLatticeError',
    'dual', 'direct_sum', 'scale', 'tensor', 'is_even', 'is_integral', 'is_unimodular',
    'determinant',
    'INFINITE_INDEX', 'SublatticeHandle', 'annihilator', 'index', 'is_primitive', 'saturation',
    'sublattice', 'sublattice_from_vectors', 'sum_of',
    'Isometry', 'NotAnIsometryError', 'char_poly', 'cofixed', 'extend_isometry',
    'fixed_sublattice', 'has_fixed_points', 'isometric', 'isometry_from_ambient',
    'permutation_matrix', 'reflection', 'restrict_isometry', 'trace',
    'lattice_from_dict', 'lattice_to_dict', 'load_lattice', 'save_lattice',
]
