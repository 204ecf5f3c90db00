"""
Catalog
Named lattices, codes and the concrete embeddings, glues and towers built from them
"""

from .data import (
    EMBEDDING_FILE, CatalogError, ChecksumMismatchError, ConstructionError, embedding_data,
    file_digest, load_embedding_data,
)
from .codes import (
    Code, code, code_from_data, golay24, golay_automorphisms, golay_element_3_8, hamming8,
    hexacode, signed_automorphism_3, ternary_golay, tetracode, tripled,
)
from .root_lattices import (
    A2_ROTATION, E8Model, a_glue_vector, e8_a8_plus_three, e8_tetracode, ee8, eee8,
    extend_from_a2_blocks, glue_vector, h_on_e8, root_lattice, simple_root_vectors,
)
from .leech import LEECH_SCALE, leech, leech_with_h
from .niemeier import (
    NIEMEIER_TYPES, NamedEmbedding, NiemeierSample, a4_6_rejection, all_embeddings, code_lattice,
    niemeier, normalize_type, sample_niemeier, shape_3_2_permutations,
)
from .glues import (
    alpha_glue, beta_glue, l_beta, leech_decomposition, m_phi, m_phi_glue, q_group, q_std,
    r_group, r_std,
)
from .tower import (
    K3CData, Refusal, Tower, doubly_even_classes, ee8_sublattices, k_sublattice_3C, m4_set,
    m_mprime_tower, miyamoto_isometry, phi_sign,
)
from .builds import build_lattice, build_names

__all__ = [
    'EMBEDDING_FILE', 'CatalogError', 'ChecksumMismatchError', 'ConstructionError',
    'embedding_data', 'file_digest', 'load_embedding_data',
    'Code', 'code', 'code_from_data', 'golay24', 'golay_automorphisms', 'golay_element_3_8',
    'hamming8', 'hexacode', 'signed_automorphism_3', 'ternary_golay', 'tetracode', 'tripled',
    'A2_ROTATION', 'E8Model', 'a_glue_vector', 'e8_a8_plus_three', 'e8_tetracode', 'ee8', 'eee8',
    'extend_from_a2_blocks', 'glue_vector', 'h_on_e8', 'root_lattice', 'simple_root_vectors',
    'LEECH_SCALE', 'leech', 'leech_with_h',
    'NIEMEIER_TYPES', 'NamedEmbedding', 'NiemeierSample', 'a4_6_rejection', 'all_embeddings',
    'code_lattice', 'niemeier', 'normalize_type', 'sample_niemeier', 'shape_3_2_permutations',
    'alpha_glue', 'beta_glue', 'l_beta', 'leech_decomposition', 'm_phi', 'm_phi_glue',
    'q_group', 'q_std', 'r_group', 'r_std',
    'K3CData', 'Refusal', 'Tower', 'doubly_even_classes', 'ee8_sublattices', 'k_sublattice_3C',
    'm4_set', 'm_mprime_tower', 'miyamoto_isometry', 'phi_sign',
    'build_lattice', 'build_names',
]
