"""
Configuration Module
Settings untuk nondet-agg
"""

__version__ = '1.0.0'
__all__ = ['settings']
