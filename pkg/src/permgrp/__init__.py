"""
Permutation Groups
Permutations, Schreier-Sims chains, isometry actions on short vectors and stabilizer computations
"""

from .perm import (
    Perm, commutator, compose, compose_all, conjugate, cycle_type, cycles, first_moved_point,
    fixed_points, from_cycles, identity_perm, invert, is_identity, order, power,
)
from .bsgs import (
    Bsgs, derived_subgroup, derived_subgroup_order, extend, find_element, normal_closure,
    orbit_of, orbit_transversal, schreier_sims,
)
from .action import PermAction, PointSetError, perm_from_isometry
from .backtrack import (
    AutomorphismGroup, IsometrySearch, SearchBudgetExceeded, aut_generators, automorphism_group,
    choose_sequence, find_isometry, preserves,
)
from .stabilizer import (
    CommonStabilizerReport, centralizer_in, common_stabilizer_report, conjugating_perm,
    orbit_stabilizer,
)

bsgs = schreier_sims

__all__ = [
    'Perm', 'commutator', 'compose', 'compose_all', 'conjugate', 'cycle_type', 'cycles',
    'first_moved_point', 'fixed_points', 'from_cycles', 'identity_perm', 'invert', 'is_identity',
    'order', 'power',
    'Bsgs', 'bsgs', 'derived_subgroup', 'derived_subgroup_order', 'extend', 'find_element',
    'normal_closure', 'orbit_of', 'orbit_transversal', 'schreier_sims',
    'PermAction', 'PointSetError', 'perm_from_isometry',
    'AutomorphismGroup', 'IsometrySearch', 'SearchBudgetExceeded', 'aut_generators',
    'automorphism_group', 'choose_sequence', 'find_isometry', 'preserves',
    'CommonStabilizerReport', 'centralizer_in', 'common_stabilizer_report', 'conjugating_perm',
    'orbit_stabilizer',
]
