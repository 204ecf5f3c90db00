"""
Glue
Discriminant groups, glue maps, overlattices and mod-3 quadratic spaces
"""

from .discriminant import (
    DiscriminantAutomorphism, DiscriminantGroup, GlueError, NotASimilitudeError,
    discriminant_group, similitude_scale,
)
from .gluemap import (
    GlueMap, glue_from_basis, glue_of_overlattice, glue_overlattice,
    glue_overlattice_with_handles, is_even_glue, is_totally_singular, load_glue,
    overlattice_basis, save_glue, twist,
)
from .mod3 import (
    FixedSpaceReport, Mod3Space, bilinear_form_mod3, fixed_space_mod3, mod3_matrix, mod3_space,
    random_valid_glue,
)

__all__ = [
    'DiscriminantAutomorphism', 'DiscriminantGroup', 'GlueError', 'NotASimilitudeError',
    'discriminant_group', 'similitude_scale',
    'GlueMap', 'glue_from_basis', 'glue_of_overlattice', 'glue_overlattice',
    'glue_overlattice_with_handles', 'is_even_glue', 'is_totally_singular', 'load_glue',
    'overlattice_basis', 'save_glue', 'twist',
    'FixedSpaceReport', 'Mod3Space', 'bilinear_form_mod3', 'fixed_space_mod3', 'mod3_matrix',
    'mod3_space', 'random_valid_glue',
]
