import copy
import os
import re
import sys

import yaml
from loguru import logger

DEFAULT_CONFIG = {
    'caps': {
        'oracle_points': 2 ** 20,
        'minimize_features': 20,
        'bcf_terms': 500000,
        'shap_features': 20,
    },
    'run': {
        'jobs': 1,
    },
    'bench': {
        'table1_r_min': 3,
        'table1_r_max': 8,
        'table1_r_extended': 9,
        'table2_r_values': [200, 500, 1000],
    },
    'cache': {
        'enabled': False,
        'dir': '.cache/bcf',
    },
    'logging': {
        'level': 'INFO',
    },
}

ENV_OVERRIDES = {
    'PEDT_LOG_LEVEL': ('logging', 'level', str),
    'PEDT_JOBS': ('run', 'jobs', int),
    'PEDT_CACHE_DIR': ('cache', 'dir', str),
}


def _merge(base: dict, extra: dict) -> dict:
    out = copy.deepcopy(base)
    for key, value in (extra or {}).items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


def load_config(config_path='config.yaml') -> dict:
    """Loads configuration from a YAML file on top of the built-in defaults.

    A missing file yields the defaults; PEDT_* environment variables
    override both.
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if config_path and os.path.exists(config_path):
        with open(config_path, 'r', encoding='utf-8') as f:
            try:
                config = _merge(config, yaml.safe_load(f) or {})
            except yaml.YAMLError as exc:
                raise ValueError(f"Error parsing config file: {exc}")
    elif config_path and config_path != 'config.yaml':
        raise FileNotFoundError(f"Config file not found: {config_path}")

    for var, (section, key, cast) in ENV_OVERRIDES.items():
        raw = os.environ.get(var)
        if raw:
            try:
                config[section][key] = cast(raw)
            except ValueError:
                raise ValueError(f"{var}={raw!r} is not a valid {cast.__name__}")
    return config


def configure_logging(level: str = 'INFO') -> None:
    """Route loguru output to stderr at the given level."""
    logger.remove()
    logger.add(sys.stderr, level=str(level).upper(),
               format="<level>{level: <8}</level> | {name}:{function} - {message}")


def ensure_dir_exists(path: str) -> None:
    """Creates a directory if it doesn't exist."""
    if path:
        os.makedirs(path, exist_ok=True)


def sanitize_filename(name: str) -> str:
    """Sanitizes a string to be safe for filenames.

    Converts to lowercase and replaces spaces with underscores.
    """
    name = str(name).lower().strip()
    name = re.sub(r'[\\/*?":"<>|]', '', name)
    name = re.sub(r'\s+', '_', name)
    return name
