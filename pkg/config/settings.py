"""
Configuration Settings
Konfigurasi nondet-agg: default bounds, guards, logging dan environment
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Base Directory
BASE_DIR = Path(__file__).resolve().parent.parent

# .env di root repo (opsional); environment asli tetap menang
load_dotenv(BASE_DIR / '.env', override=False)

# Version
TOOL_NAME = 'nondet-agg'
VERSION = '1.0.0'

# Catalogue Paths
CATALOGUE_DIR = os.path.join(BASE_DIR, 'catalogue')
OPSPEC_DIR = os.path.join(CATALOGUE_DIR, 'opspecs')
PRESETS_FILE = os.path.join(CATALOGUE_DIR, 'presets.json')
OPSPEC_SUFFIX = '.ops'
CATALOGUE_PREFIX = 'catalogue:'

# Monad Law Settings
LAW_SETTINGS = {
    'carrier': 'mod 5',
    'set_bound': 3,
}

# Lemma Settings (fold/perm lemmas + homomorphism lemmas)
LEMMA_SETTINGS = {
    'max_len': 4,
    'function': 'succ',
    'predicate': 'is_even',
    'hom_parts': 3,
    'hom_len': 2,
}

# Aggregate Settings
AGGREGATE_SETTINGS = {
    'max_parts': 3,
    'max_len': 2,
    'image_bound': 3,
}

# Float Demo Settings
DEMO_SETTINGS = {
    'preset': 'cancellation',
    'full_scale_low': -8192.0,
    'full_scale_high': 12288.0,
}

# Guards
GUARDS = {
    'max_parts': 6,             # 720 merge orders; --override-guards lifts it
    'max_len': 7,               # hard cap
    'set_bound': 5,             # hard cap
    'max_image_bound': 12,
    'max_carrier_size': 4096,
    'demo_max_partitions': 6,
}

# Engine Settings
ENGINE_SETTINGS = {
    'chunk_size': 256,
    'default_max_workers': 4,
}

# Environment Variables
ENV_THREADS = 'NONDET_AGG_THREADS'
ENV_LOG_LEVEL = 'NONDET_AGG_LOG_LEVEL'
ENV_LOG_DIR = 'NONDET_AGG_LOG_DIR'

# Logging Settings
LOG_LEVEL = os.getenv(ENV_LOG_LEVEL, 'WARNING').upper()
LOG_DIR = os.getenv(ENV_LOG_DIR) or None
LOG_FORMAT = '<level>{level: <8}</level> | {extra[component]} | {message}'
LOG_FILE_FORMAT = '{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[component]} | {message}'
LOG_ROTATION = '5 MB'

# Export Settings
EXPORT_FORMATS = ('json', 'csv', 'pdf')

# Runtime options set by the CLI for the current process
RUNTIME = {
    'progress': False,
}

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'
TESTING = os.getenv('TESTING', 'False').lower() == 'true'


def get_config(key: str, default=None):
    """
    Get configuration value

    Args:
        key: Configuration key (nama konstanta di module ini)
        default: Default value jika key tidak ditemukan

    Returns:
        Configuration value
    """
    return globals().get(key, default)


def get_worker_count() -> int:
    """
    Jumlah worker untuk quantification engine

    NONDET_AGG_THREADS (integer positif) membatasi jumlah worker. Output
    tidak pernah bergantung pada nilai ini.

    Raises:
        ValueError: NONDET_AGG_THREADS bukan integer positif
    """
    raw = os.getenv(ENV_THREADS)
    if raw is None or not raw.strip():
        return max(1, min(ENGINE_SETTINGS['default_max_workers'], os.cpu_count() or 1))
    try:
        workers = int(raw.strip())
    except ValueError:
        raise ValueError(f"{ENV_THREADS} must be a positive integer, got {raw!r}")
    if workers < 1:
        raise ValueError(f"{ENV_THREADS} must be a positive integer, got {raw!r}")
    return workers


if __name__ == "__main__":
    print("=" * 70)
    print(f"{TOOL_NAME} v{VERSION}")
    print("=" * 70)
    print(f"Base Directory: {BASE_DIR}")
    print(f"Catalogue: {OPSPEC_DIR}")
    print(f"Guards: {GUARDS}")
    print(f"Workers: {get_worker_count()}")
    print(f"Log level: {LOG_LEVEL}")
