"""
Verification Module
Lemma registry, verification results and configuration loading
"""

from .factory import CACHE_ENV, DEFAULTS, ConfigError, cache_dir, load_config
from .lemmas import (
    LEMMAS, Lemma, Outcome, UnknownLemmaError, VerificationContext, get_lemma, lemma,
    lemma_ids, lie_identity_checks,
)
from .result import FAIL, PASS, STATUSES, UNRESOLVED, VerificationResult, json_safe, parse_exact
from .verifier import Verifier, all_passed

__all__ = [
    'CACHE_ENV', 'DEFAULTS', 'ConfigError', 'cache_dir', 'load_config',
    'LEMMAS', 'Lemma', 'Outcome', 'UnknownLemmaError', 'VerificationContext', 'get_lemma', 'lemma',
    'lie_identity_checks', 'lemma_ids',
    'FAIL', 'PASS', 'STATUSES', 'UNRESOLVED', 'VerificationResult', 'json_safe', 'parse_exact',
    'Verifier', 'all_passed',
]
