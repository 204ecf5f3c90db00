"""
Short Vectors
Exact enumeration of short lattice vectors, roots, theta coefficients and root systems
"""

from .enumerate import (
    DEFAULT_MARGIN, EnumerationBudgetError, ShortVectorSet, minimum, root_count, roots,
    short_vectors, theta_coefficients,
)
from .roots import (
    UnidentifiedComponentError, extended_path_subsystem, format_root_type, highest_root,
    is_path_diagram, order_path, positive_roots, root_components, root_system_type, simple_roots,
)

__all__ = [
    'DEFAULT_MARGIN', 'EnumerationBudgetError', 'ShortVectorSet', 'minimum', 'root_count',
    'roots', 'short_vectors', 'theta_coefficients',
    'UnidentifiedComponentError', 'extended_path_subsystem', 'format_root_type', 'highest_root',
    'is_path_diagram', 'order_path', 'positive_roots', 'root_components', 'root_system_type',
    'simple_roots',
]
