"""
Configuration Loading
Reads config/config.yaml and fills in defaults
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

CACHE_ENV = "THREEC_CACHE_DIR"
DEFAULT_CONFIG_PATH = "config/config.yaml"

DEFAULTS: Dict[str, Any] = {
    'search': {
        'seed': 0,
        'find_element_attempts': 2000,
        'isometry_budget_seconds': None,
    },
    'lattice': {
        'lll_delta': '99/100',
    },
    'shortvec': {
        'workers': 1,
        'float_margin': 1e-6,
    },
    'verification': {
        'seed': 0,
        'budget_seconds': None,
        'ww_samples': 20,
        'ww_max_attempts': 200,
        'm4_alphas': 4,
        'niemeier_samples': 200,
        'roundtrip_samples': 50,
        'lie_sizes': [2, 4, 8],
    },
    'paths': {
        'lattice_dir': 'lattices',
        'report_dir': 'reports',
        'cache_dir': '.threec-cache',
    },
}


class ConfigError(ValueError):
    """The configuration file could not be read or has the wrong shape"""


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[Union[str, Path]] = DEFAULT_CONFIG_PATH) -> Dict[str, Any]:
    """Load configuration from YAML file; a missing file gives the defaults.

    Raises:
        ConfigError: if the file is not valid YAML or not a mapping
    """
    loaded: Dict[str, Any] = {}
    if config_path and Path(config_path).exists():
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{config_path}: {e}") from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"{config_path}: top level must be a mapping")
    config = _merge(DEFAULTS, loaded)
    if os.environ.get(CACHE_ENV):
        config['paths']['cache_dir'] = os.environ[CACHE_ENV]
    return config


def cache_dir(config: Dict[str, Any]) -> Path:
    path = Path(config.get('paths', {}).get('cache_dir', DEFAULTS['paths']['cache_dir']))
    path.mkdir(parents=True, exist_ok=True)
    return path
