"""
Testing Module
pytest suites untuk nondet-agg
"""

__version__ = '1.0.0'
__all__ = [
    'test_algebra', 'test_nondet', 'test_permlib', 'test_homlib',
    'test_sparkagg', 'test_catalogue', 'test_utils', 'test_cli',
]
